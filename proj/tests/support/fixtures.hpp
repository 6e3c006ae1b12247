// Exact-case fixtures. Expected values are closed forms (rationals, surds,
// arctangents of exact ratios); the coordinate oracle supplies the values
// that have no short closed form.
#ifndef OBLIQUE_TESTS_FIXTURES_HPP_
#define OBLIQUE_TESTS_FIXTURES_HPP_

#include <functional>
#include <string>
#include <vector>

namespace fixtures {

inline constexpr double kRelative = 1e-9;  // default agreement
inline constexpr double kExact = 1e-12;    // values that are exact rationals

struct Result {
  std::string name;
  bool ok = false;
  std::string detail;
};

class Suite {
 public:
  // |got - want| <= tol * |want|, or <= tol when want is zero.
  void near(const std::string& name, double got, double want, double tol = kRelative);
  void truth(const std::string& name, bool condition, const std::string& detail = {});

  template <class Error>
  void throws(const std::string& name, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error&) {
      truth(name, true);
      return;
    } catch (const std::exception& e) {
      truth(name, false, std::string("wrong exception: ") + e.what());
      return;
    }
    truth(name, false, "no exception");
  }

  const std::vector<Result>& results() const { return results_; }

 private:
  std::vector<Result> results_;
};

void core_fixtures(Suite& s);
void identity_fixtures(Suite& s);
void solver_fixtures(Suite& s);
void extended_fixtures(Suite& s);
void metrics_fixtures(Suite& s);
void cevian_fixtures(Suite& s);

/// Every fixture above in one suite.
Suite all_fixtures();

}  // namespace fixtures

#endif  // OBLIQUE_TESTS_FIXTURES_HPP_
