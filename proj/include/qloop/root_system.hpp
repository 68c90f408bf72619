#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace qloop {

enum class Family { A, D, E };

struct DynkinType {
    Family family = Family::A;
    int rank = 1;

    /// "A3", "D4", "E6"; throws ConfigError on anything else.
    static DynkinType parse(const std::string& text);
    std::string name() const;
    friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

using RootVec = Eigen::VectorXi;
using CartanMatrix = Eigen::MatrixXi;

/// Undirected Dynkin edges on 0-based vertices.
/// A_n: a path. D_n: path 0..n-2 plus (n-3, n-1). E_n: 0-2-3-4-...; 1 hangs off 3.
std::vector<std::pair<int, int>> dynkin_edges(const DynkinType& t);
CartanMatrix cartan_matrix(const DynkinType& t);

class RootSystem {
public:
    RootSystem(DynkinType type, CartanMatrix cartan, std::vector<RootVec> roots);

    const DynkinType& type() const { return type_; }
    int rank() const { return type_.rank; }
    const CartanMatrix& cartan() const { return cartan_; }
    /// Positive roots by height, then lexicographically descending (simples come first, in vertex order).
    const std::vector<RootVec>& positive_roots() const { return roots_; }
    int size() const { return static_cast<int>(roots_.size()); }
    const RootVec& root(int index) const { return roots_[index]; }
    std::optional<int> index_of(const RootVec& v) const;
    bool is_root(const RootVec& v) const { return index_of(v).has_value(); }
    RootVec simple(int i) const;

private:
    DynkinType type_;
    CartanMatrix cartan_;
    std::vector<RootVec> roots_;
};

int height(const RootVec& v);
std::string root_str(const RootVec& v);

RootSystem build_root_system(const DynkinType& t);

/// (a, b) = a^T A b.
int pairing_form(const RootSystem& rs, const RootVec& a, const RootVec& b);

/// A total order on positive roots, as a sequence of root indices, smallest first.
struct TotalOrder {
    std::vector<int> sequence;
    std::vector<int> position;  // inverse of sequence

    static TotalOrder from_sequence(std::vector<int> sequence);
    bool less(int a, int b) const { return position[a] < position[b]; }
};

/// True when no alpha < a' < b' < beta has a' + b' = alpha + beta.
bool is_minimal_pair(const RootSystem& rs, const TotalOrder& order, int alpha, int beta);

/// No multiset of k >= 2 roots strictly between alpha and beta sums to alpha + beta.
/// Throws std::invalid_argument unless (alpha, beta) is a minimal pair summing to a root.
bool claim1_check(const RootSystem& rs, const TotalOrder& order, int alpha, int beta);

/// No roots alpha+beta < g < beta summing to alpha+2beta, and none with
/// alpha < g < alpha+beta summing to 2alpha+beta. Same precondition.
bool claim2_check(const RootSystem& rs, const TotalOrder& order, int alpha, int beta);

/// Multisets drawn from `candidates` (root indices) with at least `min_parts`
/// parts summing to `target`. Stops after `limit` hits.
std::vector<std::vector<int>> root_decompositions(const RootSystem& rs, const std::vector<int>& candidates,
                                                  const RootVec& target, int min_parts, std::size_t limit = 1);

}  // namespace qloop
