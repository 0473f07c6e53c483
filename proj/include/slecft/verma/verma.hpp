#pragma once

#include <json.hpp>

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "slecft/symbolic/coeff_poly.hpp"
#include "slecft/symbolic/linalg.hpp"
#include "slecft/symbolic/partition.hpp"

namespace slecft::verma {

using sym::CoeffPoly;
using sym::Partition;
using sym::Rational;

// Modes (n1, ..., nr) standing for L_{n1} ... L_{nr} e; L_{nr} acts first.
using VirasoroWord = std::vector<int>;

// sum_k c_k L_{-k} e in the PBW basis, where
// L_{-k} = ... L_{-3}^{k3} L_{-2}^{k2} L_{-1}^{k1}.
class VermaElement {
 public:
  VermaElement() = default;
  static VermaElement basis(const Partition& k, const CoeffPoly& c = CoeffPoly(1L));

  const std::map<Partition, CoeffPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CoeffPoly coefficient(const Partition& k) const;
  void add(const Partition& k, const CoeffPoly& c);
  VermaElement& operator+=(const VermaElement& o);
  VermaElement operator+(const VermaElement& o) const;
  VermaElement operator-(const VermaElement& o) const;
  VermaElement operator*(const CoeffPoly& s) const;
  bool operator==(const VermaElement& o) const { return terms_ == o.terms_; }
  VermaElement substitute(const std::map<sym::Generator, Rational>& assignment) const;
  std::string to_string() const;

 private:
  std::map<Partition, CoeffPoly> terms_;
};

// Highest weight and central charge; symbolic by default (generators lambda, c).
struct Weights {
  CoeffPoly lambda = CoeffPoly::gen(sym::Generator::lambda());
  CoeffPoly cc = CoeffPoly::gen(sym::Generator::cc());

  static Weights symbolic() { return {}; }
  static Weights specialized(const Rational& lambda, const Rational& cc) { return {CoeffPoly(lambda), CoeffPoly(cc)}; }
};

// Highest-weight module with memoized single-mode action on basis vectors.
// The memo is guarded by a mutex, so one instance may be shared.
class VermaModule {
 public:
  explicit VermaModule(Weights w = Weights::symbolic()) : w_(std::move(w)) {}

  const Weights& weights() const { return w_; }
  VermaElement act(int n, const Partition& k);
  VermaElement act(int n, const VermaElement& v);
  VermaElement normal_order(const VirasoroWord& word);
  // L_{k'} v with L_{k'} = L_1^{k'_1} L_2^{k'_2} ..., highest modes acting first.
  VermaElement apply_raising(const Partition& kprime, VermaElement v);
  std::size_t memo_size() const;

 private:
  VermaElement act_uncached(int n, const Partition& k);
  Weights w_;
  mutable std::mutex mu_;
  std::map<std::pair<int, Partition>, VermaElement> memo_;
};

VermaElement normal_order(const VirasoroWord& word, const Weights& w = Weights::symbolic());

struct GramMatrix {
  int level = 0;
  std::vector<Partition> basis;
  sym::PolyMatrix entries;
};

GramMatrix gram(int N, const Weights& w = Weights::symbolic());
GramMatrix gram(int N, VermaModule& module);
nlohmann::json to_json(const GramMatrix& g);

Rational kac_lambda(int r, int s, const Rational& kappa);

inline constexpr int kDefaultMaxKacLevel = 6;
CoeffPoly kac_det(int N, int max_level = kDefaultMaxKacLevel);

std::vector<VermaElement> singular_vectors(int N, const Rational& weight, const Rational& cc);

// Residue of v_n''' v_m with v_n = -z^{n+1}.
Rational cocycle(int n, int m);

}  // namespace slecft::verma
