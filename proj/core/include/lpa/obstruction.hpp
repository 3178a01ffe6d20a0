#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpa/element.hpp"

namespace lpa {

/// Integer polynomial in the formal variable "c"; index = power of c.
struct IntPolynomial {
  std::vector<mpz_class> coeffs;

  bool is_zero() const;
  void trim();
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  std::string to_string() const;  // e.g. "-3*c^2 + 1"
};

/// The coefficients a_0, a_s, a_2s, ... forced on any corner solution of
/// (v+c)^n a (v+c)^n = (v+c)^n, for a cycle c of length s: a_0 = 1 (the
/// vertex v), and each a_ts is the integer polynomial determined by
/// matching the degree-ts graded component,
///   sum_{d=0..t} C(2n,d) c^d f_{t-d} = C(n,t) c^t.
/// The double sum over left and right cycle powers collapses into the
/// C(2n,d) weights by the Vandermonde identity sum_j C(n,j) C(n,d-j).
struct CyclePowerSeries {
  int s = 1;
  int n = 1;
  std::vector<IntPolynomial> coeffs;  // f_0 ... f_t_max
};

CyclePowerSeries forced_coefficients(int s, int n, int t_max);

/// Exact check of (v+c)^n (v alpha v) (v+c)^n = (v+c)^n in the algebra.
bool check_candidate(const GraphPtr& g, const Path& cycle, int n,
                     const Element& alpha);

struct RefutationReport {
  int s = 1, n = 1, t_max = 0;
  CyclePowerSeries forced;
  bool components_commute_with_cycle = false;
  // Greatest i <= t_max*s with a_i (v+c)^{2n} != 0 inside the computed
  // window; i = 0 always qualifies since a_0 = v.
  int max_surviving_index = 0;
  long left_degree = 0;         // guaranteed floor 2sn (witness i = 0)
  long left_degree_window = 0;  // 2sn + max_surviving_index
  long right_degree = 0;        // ns
  bool contradiction = false;   // left_degree > right_degree
  // Bounded linear system record for the default monomial basis.
  std::size_t basis_size = 0;
  std::size_t rank_unaugmented = 0;
  std::size_t rank_augmented = 0;
  bool system_infeasible = false;

  nlohmann::json to_json() const;
};

/// Executable form of the degree obstruction: computes the forced series in
/// the algebra of g, verifies commutation with the cycle, compares the
/// degree 2sn + i forced on the left against the top degree ns of the
/// right, and records the infeasibility of the bounded inner-inverse
/// system. For GF(p) sessions the construction refuses parameters whose
/// binomial coefficients vanish mod p, since the forced integer
/// coefficients are then no longer visible in the field.
RefutationReport refutation_report(const GraphPtr& g, const Path& cycle, int n,
                                   int t_max,
                                   Field field = Field::rationals());

/// Solves x^n y x^n = x^n for y restricted to the span of the given
/// monomials, by exact Gaussian elimination in normal-form coordinates.
/// nullopt means no solution exists within this span.
std::optional<Element> solve_inner_inverse_bounded(
    const GraphPtr& g, const Element& x, int n,
    const std::vector<Monomial>& basis);

/// Default basis: all normal-form monomials pq* of total length at most
/// `length_cap` supported on vertices reachable from and co-reachable to
/// the cycle.
std::vector<Monomial> default_inner_inverse_basis(const GraphPtr& g,
                                                  const Path& cycle,
                                                  int length_cap);

/// The element v + c for v the base of the cycle.
Element vertex_plus_cycle(const GraphPtr& g, Field f, const Path& cycle);

/// c^k as a path power (k = 0 gives the base vertex).
Path cycle_power(const Path& cycle, int k);

}  // namespace lpa
