#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gieseker/linalg.hpp"

namespace gieseker {

/// Bound quiver algebra of the model block on N vertices.
///
/// Basis: e_i (i = 1..N), a_{i,i+1} and a_{i+1,i} (i = 1..N-1), a_{ii} (i = 2..N).
/// a_{ij} is a map P_j -> P_i, so it has source j and target i; products read
/// right to left: x*y is defined when source(x) = target(y).
/// Nonzero products of arrows: a_{i,i+1} a_{i+1,i} = a_{ii} (i >= 2) and
/// a_{i,i-1} a_{i-1,i} = a_{ii}; a_{12} a_{21} = 0; all longer paths vanish.
class BoundQuiverAlgebra {
public:
    enum class Kind { idempotent, arrow, loop };
    struct BasisElement {
        Kind kind;
        int target;  // i in a_{ij}
        int source;  // j in a_{ij}
        std::string label;
    };

    explicit BoundQuiverAlgebra(int N);

    int vertices() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    const BasisElement& element(std::size_t b) const { return basis_.at(b); }
    const std::vector<BasisElement>& basis() const noexcept { return basis_; }

    /// Index of e_i (1-based vertex).
    std::size_t idempotent(int i) const;
    /// Index of a_{ij}, or nullopt if no such basis element.
    std::optional<std::size_t> find(int target, int source) const;

    /// Product of basis elements as a basis index, nullopt for zero.
    std::optional<std::size_t> product(std::size_t x, std::size_t y) const;
    /// Arrow swap a_{ij} <-> a_{ji}, fixing idempotents and loops.
    std::size_t swap(std::size_t b) const;

    /// Radical basis: all arrows and loops.
    std::vector<std::size_t> radical() const;

    bool verify_associativity() const;
    /// swap(xy) = swap(y) swap(x) for all basis pairs.
    bool verify_anti_automorphism() const;

private:
    int n_;
    std::vector<BasisElement> basis_;
    std::vector<std::optional<std::size_t>> table_;
};

/// Throws std::invalid_argument for N < 1.
BoundQuiverAlgebra build_model_algebra(int N);

/// Right module: v.b = v * action[b], action[xy] = action[x] * action[y].
struct QuiverModule {
    std::vector<linalg::Matrix> action;  // one square matrix per algebra basis element
    std::size_t dim = 0;
};

/// dim V_i = rank of the action of e_i; equals the composition multiplicity of L_i.
std::vector<int> dimension_vector(const BoundQuiverAlgebra& A, const QuiverModule& M);
QuiverModule direct_sum(const BoundQuiverAlgebra& A, const std::vector<QuiverModule>& parts);

/// Checks unitality and action[x]action[y] = action[xy] over all basis pairs.
bool is_module(const BoundQuiverAlgebra& A, const QuiverModule& M);

QuiverModule projective(const BoundQuiverAlgebra& A, int i);
QuiverModule simple(const BoundQuiverAlgebra& A, int i);
/// P_i modulo the trace of P_j, j < i (order p_1 > ... > p_N).
QuiverModule standard(const BoundQuiverAlgebra& A, int i);
/// Dual of the standard twisted through the arrow swap.
QuiverModule costandard(const BoundQuiverAlgebra& A, int i);
/// Indecomposable tiltings: P_2, ..., P_N, then Delta_N.
std::vector<QuiverModule> tiltings(const BoundQuiverAlgebra& A);

/// R'(b) = R(swap b)^T: turns M into a module again via the anti-automorphism.
QuiverModule twisted_dual(const BoundQuiverAlgebra& A, const QuiverModule& M);

/// Submodule generated by the rows of gens, as an echelon basis.
linalg::Echelon generated_submodule(const BoundQuiverAlgebra& A, const QuiverModule& M, const linalg::Matrix& gens);
QuiverModule restrict_to(const BoundQuiverAlgebra& A, const QuiverModule& M, const linalg::Echelon& sub);
QuiverModule quotient(const BoundQuiverAlgebra& A, const QuiverModule& M, const linalg::Echelon& sub);

/// Basis of Hom(M, N) as dim M x dim N matrices X with f(v) = v X.
std::vector<linalg::Matrix> hom_space(const BoundQuiverAlgebra& A, const QuiverModule& M, const QuiverModule& N);
bool is_isomorphic(const BoundQuiverAlgebra& A, const QuiverModule& M, const QuiverModule& N);
/// Some homomorphism M -> N is injective.
bool embeds(const BoundQuiverAlgebra& A, const QuiverModule& M, const QuiverModule& N);

struct ProjectiveResolution {
    std::vector<std::vector<int>> terms;  // vertices of the indecomposable summands of P^k
    std::vector<linalg::Matrix> differentials;  // differentials[k]: P^{k+1} -> P^k
    bool complete = false;  // true when the last computed kernel is zero
};

/// Minimal projective resolution computed through degree max_degree.
ProjectiveResolution minimal_resolution(const BoundQuiverAlgebra& A, const QuiverModule& M, int max_degree);

struct ExtGroups {
    std::vector<int> dims;  // dim Ext^k for k = 0..max_degree
    bool truncated = false;  // the resolution continues past max_degree
};

ExtGroups ext_groups(const BoundQuiverAlgebra& A, const QuiverModule& M, const QuiverModule& N, int max_degree);
ExtGroups ext_groups(const BoundQuiverAlgebra& A, const ProjectiveResolution& res, const QuiverModule& N,
                     int max_degree);
/// Ext^k(M, L_j) read off as the multiplicity of P_j in degree k of the minimal resolution.
ExtGroups ext_to_simple_by_multiplicity(const ProjectiveResolution& res, int j, int max_degree);

struct ModelCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ModelReport {
    int N = 0;
    std::vector<ModelCheck> checks;
    std::vector<int> rhom_t_l1;  // dim Ext^k(T, L_1), k = 0..N
    std::optional<int> concentration_degree;
    bool degree_matches_literal_n = false;  // degree N rather than N - 1
    bool all_passed() const;
    const ModelCheck* find(const std::string& name) const;
};

ModelReport verify_model_properties(int N);

struct K0Check {
    bool passed = false;
    std::vector<std::vector<int>> decomposition;  // D[k][j] = [Delta_k : L_j]
    std::vector<std::vector<int>> cartan;         // C[i][j] = [P_i : L_j]
    bool standard_costandard_classes_agree = false;
    bool cartan_equals_dtd = false;
};

K0Check k0_class_check(const BoundQuiverAlgebra& A);

/// {"dimension", "dimension_vector", "actions": {label: rows of "p/q" strings}}.
nlohmann::json module_to_json(const BoundQuiverAlgebra& A, const QuiverModule& M);
nlohmann::json report_to_json(const ModelReport& r);

}  // namespace gieseker
