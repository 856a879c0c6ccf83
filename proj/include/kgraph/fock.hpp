#ifndef KGRAPH_FOCK_HPP
#define KGRAPH_FOCK_HPP

#include <kgraph/algebra.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kgraph {

// Truncation of l^2(path space) to the span of {e_mu : d(mu) <= N}
// componentwise. The full Fock space is infinite dimensional; explicit
// interior margins per check make every equality below exact instead of
// approximate.
class FockSpace {
public:
    FockSpace(const Skeleton& sk, Degree bound);

    const Skeleton& skeleton() const { return *sk_; }
    const Degree& bound() const { return bound_; }
    const std::vector<Path>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    int index_of(const Path& p) const;  // -1 when outside the truncation
    const Path& basis_path(int i) const { return basis_.at(static_cast<std::size_t>(i)); }

    // e_mu lies in the interior for margin M iff d(mu) <= N - M.
    bool in_interior(int basis_index, const Degree& margin) const;

private:
    const Skeleton* sk_;
    Degree bound_;
    std::vector<Path> basis_;
    std::map<Path, int> index_;
};

// Sparse operator on a FockSpace with exact rational entries.
class FockOperator {
public:
    explicit FockOperator(const FockSpace& sp) : sp_(&sp) {}

    const FockSpace& space() const { return *sp_; }
    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    void add(int row, int col, const Rational& value);
    Rational at(int row, int col) const;

    FockOperator operator+(const FockOperator& o) const;
    FockOperator operator-(const FockOperator& o) const;
    FockOperator operator*(const FockOperator& o) const;
    FockOperator transpose() const;
    FockOperator scaled(const Rational& c) const;
    bool operator==(const FockOperator& o) const { return entries_ == o.entries_; }
    bool operator!=(const FockOperator& o) const { return entries_ != o.entries_; }

    bool is_diagonal() const;
    Rational max_abs_entry() const;

    // Column-restricted comparison: both operators agree on every basis
    // column inside the margin-M interior.
    bool equals_on_interior(const FockOperator& o, const Degree& margin) const;
    // Largest |entry| over interior columns of (*this - o).
    Rational interior_residual(const FockOperator& o, const Degree& margin) const;

    FockOperator apply_diagonal_compression() const;  // keeps (i, i) entries

private:
    const FockSpace* sp_;
    std::map<std::pair<int, int>, Rational> entries_;
};

// The Fock family: S_lambda e_mu = e_{lambda mu} when range(lambda) =
// source(mu) and the composite stays inside the truncation, else 0.
// Requires d(lambda) <= N.
FockOperator fock_generator(const FockSpace& sp, const Path& lambda);

// sum over terms of coeff . S_left S_right^*; requires every term degree <= N.
FockOperator evaluate(const FockSpace& sp, const FormalElement& a);

struct RelationReport {
    std::string relation;              // "(1)" .. "(6)" or "nica(p,q)"
    std::string status;                // "pass" | "interior-pass" | "fail"
    Degree margin;                     // join of tested degrees
    std::optional<Path> witness;       // first failing column / defect vertex
    double residual_norm = 0.0;        // sup |entry| of the residual
    std::string detail;
    bool matches_prediction = true;    // relation (6): defect vector equals e_v
};

// Checks Toeplitz-Cuntz-Krieger relations (1)-(5) on interior subspaces
// and reports the relation (6) defect per (vertex, degree). In the Fock
// representation (6) fails with defect exactly e_v whenever s_p^{-1}(v)
// is nonempty; that failure is the expected "Toeplitz, not Cuntz-Pimsner"
// outcome. An empty s_p^{-1}(v) is reported distinctly: read literally
// the relation then demands s_v = 0, which the Fock family also violates
// (the sink ambiguity).
// `pair_cap` bounds the degrees of the pairs fed to relations (2) and (5).
std::vector<RelationReport> check_relations(const FockSpace& sp,
                                            std::optional<Degree> pair_cap = std::nullopt);

// Nica covariance at full sums:
// (sum over d(mu)=p of S_mu S_mu^*)(sum over d(nu)=q) = sum over d = p v q.
// All three are diagonal 0/1 operators, so equality is exact, no margin.
RelationReport check_nica_products(const FockSpace& sp, const Degree& p, const Degree& q);

struct FaithfulnessReport {
    bool nonzero = false;
    std::optional<Path> witness;       // a surviving basis vector
    bool vertex_survives = false;      // e_v itself survives
    int support = 0;                   // rank of the diagonal projection
    // Product over the generator-degree reduction sets G_m; it is dominated
    // by the requested product, so its survival already forces survival.
    std::vector<std::vector<Path>> generator_sets;
    bool generator_dominated = false;
};

// Evaluates prod over p in R of (S_v - sum over lambda in F_p of
// S_lambda S_lambda^*) exactly as a diagonal 0/1 operator. Each F_p must
// consist of degree-p paths with source v, with p <= N.
FaithfulnessReport faithfulness_hypothesis(
    const FockSpace& sp, int vertex,
    const std::vector<std::pair<Degree, std::vector<Path>>>& sets);

struct NormEstimate {
    double value = 0.0;
    bool converged = true;
    int iterations = 0;
    bool diagonal_shortcut = false;
};

// Largest singular value. Diagonal operators use the exact max-|entry|
// shortcut; otherwise deterministic-seed power iteration on A^T A with a
// 10^4 iteration cap, reporting the best estimate on non-convergence.
NormEstimate operator_norm(const FockOperator& a, double tol);

}  // namespace kgraph

#endif
