#ifndef OBLIQUE_CORE_HPP_
#define OBLIQUE_CORE_HPP_

#include <array>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oblique {

inline constexpr double kPi = std::numbers::pi;

// Error hierarchy. Every module reports failures through these types; the CLI
// maps them onto exit codes.
class TriangleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside an operation's domain (nonpositive lengths, angles
/// outside (0, 180) degrees, malformed tolerances).
class InvalidInput : public TriangleError {
 public:
  using TriangleError::TriangleError;
};

/// The given parameters cannot belong to any triangle.
class NoSolution : public TriangleError {
 public:
  using TriangleError::TriangleError;
};

/// A formula was evaluated outside the range where it is defined.
class DomainError : public TriangleError {
 public:
  using TriangleError::TriangleError;
};

/// The requested quantity is singular for this particular triangle.
class DegenerateInput : public TriangleError {
 public:
  using TriangleError::TriangleError;
};

/// Two computation routes that must agree did not.
class VerificationFailure : public TriangleError {
 public:
  using TriangleError::TriangleError;
};

/// Plane angle. Stored in radians; degrees are the external unit.
class Angle {
 public:
  constexpr Angle() = default;

  static constexpr Angle from_radians(double radians) { return Angle{radians}; }
  static constexpr Angle from_degrees(double degrees) {
    return Angle{degrees * (kPi / 180.0)};
  }

  constexpr double radians() const { return radians_; }
  constexpr double degrees() const { return radians_ * (180.0 / kPi); }

  /// True for a valid interior angle of a nondegenerate triangle.
  constexpr bool is_interior() const { return radians_ > 0.0 && radians_ < kPi; }

  constexpr auto operator<=>(const Angle&) const = default;

 private:
  explicit constexpr Angle(double radians) : radians_(radians) {}
  double radians_ = 0.0;
};

/// Vertex label; side `x` is opposite vertex `X`.
enum class Vertex : std::size_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<Vertex, 3> kVertices = {Vertex::A, Vertex::B, Vertex::C};

/// The two vertices following `v` in cyclic order A -> B -> C -> A.
constexpr Vertex next(Vertex v) {
  return static_cast<Vertex>((static_cast<std::size_t>(v) + 1) % 3);
}
constexpr Vertex prev(Vertex v) {
  return static_cast<Vertex>((static_cast<std::size_t>(v) + 2) % 3);
}

struct Sides {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double operator[](Vertex v) const {
    switch (v) {
      case Vertex::A: return a;
      case Vertex::B: return b;
      case Vertex::C: return c;
    }
    return a;
  }
  double perimeter() const { return a + b + c; }
  double max() const;
  double min() const;
};

/// Tolerance policy shared by every operation.
///
/// `classification` is the relative band used when a branch depends on an
/// exact equality (a == b in the ambiguous case, tangency, the 90 degree
/// boundary). `residual` is the acceptance bound for verification residuals.
/// `degenerate` is the relative margin, against the perimeter, below which a
/// triangle inequality counts as collapsed.
struct Tolerances {
  double classification = 1e-12;
  double residual = 1e-9;
  double degenerate = 1e-12;

  /// Throws InvalidInput unless all positive and classification <= residual.
  void validate() const;
};

enum class CaseTag {
  Asa,
  Aas,
  Ssa,
  Sas,
  SasTangent,
  Sss,
  Perimeter,
  SideSum,
  FromMedians,
  FromAltitudes,
};

std::string_view to_string(CaseTag tag);

struct TriangleSolution {
  Sides sides;
  std::array<Angle, 3> angles;  // (A, B, C), opposite (a, b, c)
  CaseTag case_tag = CaseTag::Sss;

  double side(Vertex v) const { return sides[v]; }
  Angle angle(Vertex v) const { return angles[static_cast<std::size_t>(v)]; }
};

enum class Taxonomy { None, Unique, TangentRight, Two, Isosceles };

std::string_view to_string(Taxonomy taxonomy);

/// Zero, one or two triangles. Only the ambiguous case produces anything but
/// None or Unique.
struct SolutionSet {
  std::vector<TriangleSolution> solutions;
  Taxonomy taxonomy = Taxonomy::None;

  static SolutionSet none() { return {}; }
  static SolutionSet unique(TriangleSolution t) { return {{std::move(t)}, Taxonomy::Unique}; }

  bool empty() const { return solutions.empty(); }
  std::size_t size() const { return solutions.size(); }
};

struct SideVerdict {
  enum class Status { Valid, Degenerate, Invalid };

  Status status = Status::Valid;
  std::string violated;  // e.g. "a + b > c"; empty when valid

  bool valid() const { return status == Status::Valid; }
};

std::string_view to_string(SideVerdict::Status status);

/// Strict triangle inequalities with a margin of tol.degenerate * perimeter.
SideVerdict validate_sides(const Sides& s, const Tolerances& tol = {});

double semiperimeter(const Sides& s);

/// p - x for the side opposite `v`, evaluated as (y + z - x) / 2.
double deficit(const Sides& s, Vertex v);

/// Angle between sides `adjacent1` and `adjacent2` facing side `opposite`,
/// from the law of cosines, evaluated in a factored half-angle form so that
/// angles near 0 or 180 degrees keep full relative precision.
Angle included_angle(double adjacent1, double adjacent2, double opposite);

/// |x - y| <= rel * max(|x|, |y|).
bool nearly_equal(double x, double y, double rel);

/// Interior-angle comparison at the classification tolerance (relative to pi).
bool angles_equal(Angle x, Angle y, const Tolerances& tol = {});

/// Throws InvalidInput unless `value` is a strictly positive finite length.
void require_positive(double value, std::string_view name);

/// Throws InvalidInput unless `angle` lies in (0, 180) degrees.
void require_interior(Angle angle, std::string_view name);

}  // namespace oblique

#endif  // OBLIQUE_CORE_HPP_
