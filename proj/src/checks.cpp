#include "indsets/checks.hpp"

#include <exception>
#include <functional>
#include <string>

#include "indsets/bijection.hpp"
#include "indsets/closed_forms.hpp"
#include "indsets/genfunc.hpp"
#include "indsets/transfer.hpp"

namespace indsets {

namespace {

std::string render(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].str();
  }
  return s;
}

std::vector<BigInt> ints(std::initializer_list<long long> v) {
  return {v.begin(), v.end()};
}

class Recorder {
 public:
  void check(std::string name, const std::function<std::string()>& body) {
    // body returns an empty string on success, a diagnostic otherwise
    try {
      std::string failure = body();
      results_.push_back({std::move(name), failure.empty(), failure});
    } catch (const std::exception& e) {
      results_.push_back({std::move(name), false, e.what()});
    }
  }
  void prefix(std::string name, Family f, int ell,
              const std::vector<BigInt>& expected) {
    check(std::move(name), [&] {
      const auto got =
          count_series(f, ell, static_cast<int>(expected.size()) - 1);
      return got == expected ? std::string() : "got " + render(got);
    });
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_reference_checks() {
  Recorder r;

  r.prefix("g3 prefix", Family::G, 3,
           ints({1, 4, 14, 48, 164, 560, 1912, 6528, 22288, 76096}));
  r.prefix("r3 prefix", Family::R, 3,
           ints({1, 4, 10, 28, 76, 208, 568, 1552, 4240}));
  r.prefix("p4 prefix", Family::P, 4,
           ints({1, 5, 17, 61, 217, 773, 2753, 9805, 34921, 124373}));

  for (Family f : {Family::G, Family::R, Family::K})
    for (int ell = 3; ell <= 6; ++ell)
      r.check(std::string(family_name(f)) + std::to_string(ell) +
                  " generating function",
              [&] {
                const RationalGF got = gf_from_transfer(f, ell);
                const RationalGF want = paper_gf(f, ell);
                return got == want ? std::string()
                                   : got.to_string() + " != " + want.to_string();
              });
  for (int ell = 3; ell <= 12; ++ell)
    r.check("p" + std::to_string(ell) + " generating function", [&] {
      const RationalGF got = gf_from_transfer(Family::P, ell);
      return got == p_gf(ell) ? std::string() : got.to_string();
    });
  for (int ell = 3; ell <= 12; ++ell)
    r.check("p" + std::to_string(ell) + " first-column identity", [&] {
      return verify_p_first_column(ell) ? std::string() : "identity fails";
    });

  r.check("k3 equals g3 (n <= 20)", [] {
    return count_series(Family::K, 3, 20) == count_series(Family::G, 3, 20)
               ? std::string()
               : "series differ";
  });
  r.check("p3 equals r3 (n <= 20)", [] {
    return count_series(Family::P, 3, 20) == count_series(Family::R, 3, 20)
               ? std::string()
               : "series differ";
  });

  r.check("g3 closed form and recurrences (n <= 50)", [] {
    const auto series = count_series(Family::G, 3, 50);
    for (int n = 0; n <= 50; ++n) {
      if (g3_closed_form(n) != series[n] || g3_via_eq1(n) != series[n] ||
          g3_via_eq2(n) != series[n] || g3_via_aux(n) != series[n])
        return "mismatch at n = " + std::to_string(n);
    }
    return std::string();
  });
  r.check("g3 minimal recurrence", [] {
    const auto got = min_recurrence(count_series(Family::G, 3, 11));
    return got == IntPolynomial{1, -4, 2} ? std::string() : got.to_string();
  });
  r.check("cubic recurrence factors through the quadratic", [] {
    return IntPolynomial{1, -2, -6, 4} ==
                   IntPolynomial{1, -4, 2} * IntPolynomial{1, 2}
               ? std::string()
               : "product differs";
  });
  r.check("g3 is the binomial transform of Pell numbers", [] {
    std::vector<BigInt> pells{0};
    for (int m = 1; m <= 19; ++m) pells.push_back(pell(m));
    const auto g = count_series(Family::G, 3, 18);
    std::vector<BigInt> expected{0};
    expected.insert(expected.end(), g.begin(), g.end());
    const auto got = binomial_transform(pells);
    return got == expected ? std::string() : "got " + render(got);
  });

  r.check("P4 subsequence counts (n <= 8)", [] {
    const auto p4 = count_series(Family::P, 4, 8);
    for (int n = 1; n <= 8; ++n) {
      if (BigInt(valid_sequences(n).size()) != p4[n])
        return "mismatch at n = " + std::to_string(n);
    }
    return std::string();
  });
  r.check("P4 sequences for n = 1", [] {
    std::string got;
    for (const auto& s : valid_sequences(1)) got += format_sequence(s) + " ";
    return got == "ε 12 123 2 23 " ? std::string() : got;
  });
  r.check("P4 labelled sets to sequences", [] {
    const std::pair<std::string, std::string> cases[] = {
        {"(ε,45,[5]67)", "4567"},
        {"(ε,4,[5]67)", "467"},
        {"(12,ε,[5]6)", "1256"},
        {"(ε,[3]4,67)", "3467"}};
    std::string failures;
    for (const auto& sel : independent_selections(3))
      for (const auto& [tuple, seq] : cases)
        if (sel.to_tuple_string() == tuple &&
            format_sequence(to_sequence(sel)) != seq)
          failures += tuple + " ";
    return failures;
  });
  r.check("P4 sequences to labelled sets", [] {
    const std::pair<std::string, std::string> cases[] = {
        {"4567", "{45,[5]67}"}, {"1256", "{12,[5]6}"}, {"467", "{4,[5]67}"}};
    std::string failures;
    for (const auto& [seq, set] : cases)
      if (from_sequence(parse_sequence(seq), 3).to_set_string() != set)
        failures += seq + " ";
    return failures;
  });
  r.check("P4 bijection round trip (n <= 5)", [] {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& sel : independent_selections(n))
        if (from_sequence(to_sequence(sel), n) != sel)
          return "selection " + sel.to_tuple_string();
      for (const auto& s : valid_sequences(n))
        if (to_sequence(from_sequence(s, n)) != s)
          return "sequence " + format_sequence(s);
    }
    return std::string();
  });

  return r.take();
}

}  // namespace indsets
