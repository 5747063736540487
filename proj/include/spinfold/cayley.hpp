#pragma once

#include "spinfold/exact.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace spinfold {

/// Exterior form on 8 generators. Keys are bitmasks, bit j for generator j+1.
template <class S>
class Form {
public:
  explicit Form(int degree = 0) : degree_(degree) {}

  /// 1-based indices, any order; the sign of the reordering is applied.
  static Form basis(std::vector<int> idx, S c = S(1));

  int degree() const { return degree_; }
  const std::map<unsigned, S>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// coefficient of dx_{i1...ik}, indices 1-based and strictly increasing
  S coefficient(const std::vector<int>& idx) const;
  void add(unsigned mask, const S& c);

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const S& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const S& c) { return a *= c; }
  friend bool operator==(const Form& a, const Form& b) { return a.degree_ == b.degree_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

private:
  int degree_;
  std::map<unsigned, S> terms_;
};

using MultiForm = Form<Rational>;
using ComplexForm = Form<Cyclotomic>;

int popcount8(unsigned m);
/// sign of dx_A ^ dx_B for disjoint masks
int wedge_sign(unsigned a, unsigned b);

template <class S>
Form<S> wedge(const Form<S>& a, const Form<S>& b);

/// Replace generator j by the 1-form images[j].
template <class S>
Form<S> substitute(const Form<S>& f, const std::array<Form<S>, 8>& images);

ComplexForm complexify(const MultiForm& f);
/// throws if some coefficient is not rational
MultiForm realify(const ComplexForm& f);
std::string to_string(const MultiForm& f);

struct Axis {
  int index; // 1..8
  int sign;  // +1 or -1
};

/// z_k = sign(re_k) x_{re_k} + i sign(im_k) x_{im_k}
struct CoordinatePairing {
  std::array<Axis, 4> re;
  std::array<Axis, 4> im;

  static CoordinatePairing z_coordinates();
  static CoordinatePairing w_coordinates();
  void validate() const;
  /// multiply coordinate k by i
  CoordinatePairing rotated(int k) const;
};

MultiForm cayley_form();
MultiForm kahler_form(const CoordinatePairing& p);
/// dz_1 ^ ... ^ dz_4 written in the real basis
ComplexForm holomorphic_volume(const CoordinatePairing& p);
/// 1/2 w^w + Re(i^q theta)
MultiForm su4_induced_form(const CoordinatePairing& p, int quarter_turns = 0);

/// g(z)_i = zeta_n^{phase_i} c(z_{perm_i}), c = conjugation when conjugates is set.
struct PhaseMatrix {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::array<int, 4> phase{0, 0, 0, 0};
  bool conjugates = false;
  int n = 1;

  static PhaseMatrix identity(int n = 1);
  PhaseMatrix lifted(int m) const;
  PhaseMatrix normalized() const;
  /// (g*h)(z) = g(h(z))
  PhaseMatrix operator*(const PhaseMatrix& h) const;
  friend bool operator==(const PhaseMatrix& a, const PhaseMatrix& b);
  bool is_identity() const;
  std::array<Cyclotomic, 4> apply(const std::array<Cyclotomic, 4>& v) const;
  std::string str() const;
};

// the order-8 group
PhaseMatrix alpha_g();
PhaseMatrix beta_g();
// the order-8n family, n odd
PhaseMatrix alpha_gn(int n);
PhaseMatrix beta_gn(int n);
PhaseMatrix gamma_gn(int n);

/// pull back a real form, working in the complexified basis for pairing p
MultiForm pullback(const PhaseMatrix& g, const MultiForm& f,
                   const CoordinatePairing& p = CoordinatePairing::z_coordinates());
ComplexForm pullback(const PhaseMatrix& g, const ComplexForm& f,
                     const CoordinatePairing& p = CoordinatePairing::z_coordinates());

/// Express a map given in pairing `from` as a phase matrix in pairing `to` (n | 4 only).
std::optional<PhaseMatrix> rewrite(const PhaseMatrix& g, const CoordinatePairing& from,
                                   const CoordinatePairing& to);

struct GroupTable {
  std::vector<PhaseMatrix> generators;
  std::vector<PhaseMatrix> elements;
  std::vector<std::vector<int>> mult;
  std::vector<std::pair<std::string, std::string>> relations; // verified
  std::map<std::array<int, 9>, int> index;

  int order() const { return static_cast<int>(elements.size()); }
  int identity() const;
  int inverse(int i) const;
  int find(const PhaseMatrix& g) const;
  /// words over letters a, b, c, ... naming generators; "" is the identity
  PhaseMatrix evaluate(const std::string& word) const;
  bool relation_holds(const std::string& lhs, const std::string& rhs) const;
  bool is_cyclic() const;
};

/// throws std::runtime_error past `cap` elements or if a listed relation fails
GroupTable generate_group(const std::vector<PhaseMatrix>& gens,
                          const std::vector<std::pair<std::string, std::string>>& relations = {},
                          int cap = 10000);

struct FreenessReport {
  bool free = true;
  int element = -1;
  std::array<Cyclotomic, 4> witness{};
};

FreenessReport element_fixed_vector(const PhaseMatrix& g);
FreenessReport acts_freely(const GroupTable& g);

} // namespace spinfold
