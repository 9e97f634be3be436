#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace settop {

enum class FamilyTag {
    Primitive,
    PairwiseCoprime,
    ProductFree,
    CoprimeFree,
    SMultiple,
    DistinctPairProducts,  // ij != kl for distinct i, j, k, l
    NoDivisorOfPairProduct,  // i does not divide jk when i is not j or k
    DivisibilityChain,
};

/// One of the eight set families. `s` is only meaningful for SMultiple.
struct FamilyKind {
    FamilyTag tag = FamilyTag::Primitive;
    int s = 1;

    static FamilyKind primitive() { return {FamilyTag::Primitive, 1}; }
    static FamilyKind pairwise_coprime() { return {FamilyTag::PairwiseCoprime, 1}; }
    static FamilyKind product_free() { return {FamilyTag::ProductFree, 1}; }
    static FamilyKind coprime_free() { return {FamilyTag::CoprimeFree, 1}; }
    static FamilyKind s_multiple(int s);
    static FamilyKind distinct_pair_products() { return {FamilyTag::DistinctPairProducts, 1}; }
    static FamilyKind no_divisor_of_pair_product() {
        return {FamilyTag::NoDivisorOfPairProduct, 1};
    }
    static FamilyKind divisibility_chain() { return {FamilyTag::DivisibilityChain, 1}; }

    /// Command-line name: primitive, coprime, productfree, coprimefree,
    /// smultiple, pairproducts, pairdivisor, chain.
    std::string name() const;
    /// Inverse of name(); `s` is used for smultiple. Returns nullopt on an unknown name.
    static std::optional<FamilyKind> parse(std::string_view name, int s = 1);

    friend bool operator==(const FamilyKind&, const FamilyKind&) = default;
};

/// All kinds with s = 1 for SMultiple, in declaration order.
std::vector<FamilyKind> all_family_kinds();

/// Subset of [n] as a bitmask: bit i-1 set iff i is a member. n <= 64.
class BitSubset {
public:
    static constexpr int max_universe = 64;

    BitSubset() = default;
    BitSubset(int n, std::uint64_t mask);
    static BitSubset from_elements(int n, const std::vector<int>& elements);

    int universe() const { return n_; }
    std::uint64_t mask() const { return mask_; }
    int size() const;
    bool empty() const { return mask_ == 0; }
    bool contains(int i) const { return i >= 1 && i <= n_ && ((mask_ >> (i - 1)) & 1u); }
    std::vector<int> elements() const;

    BitSubset with(int i) const;
    bool is_subset_of(const BitSubset& other) const { return (mask_ & ~other.mask_) == 0; }

    std::string to_string() const;  // "{2,3}"

    friend bool operator==(const BitSubset& a, const BitSubset& b) {
        return a.n_ == b.n_ && a.mask_ == b.mask_;
    }
    friend auto operator<=>(const BitSubset& a, const BitSubset& b) {
        return a.mask_ <=> b.mask_;
    }

private:
    int n_ = 1;
    std::uint64_t mask_ = 0;
};

/// F_{n,k} for 1 <= n <= n_max and 0 <= k <= n.
class CountTriangle {
public:
    CountTriangle(FamilyKind kind, int n_max);

    FamilyKind kind() const { return kind_; }
    int n_max() const { return n_max_; }
    /// Zero for k > n rather than an error; the printed tables pad rows this way.
    std::int64_t at(int n, int k) const;
    std::int64_t& at(int n, int k);
    std::int64_t row_sum(int n) const;
    std::vector<std::int64_t> row(int n) const;

private:
    FamilyKind kind_;
    int n_max_;
    std::vector<std::vector<std::int64_t>> rows_;
};

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int default_enumeration_guard = 24;
/// Direct maximal-clique construction for pairwise-defined families is bounded by
/// the mask width only.
inline constexpr int pairwise_direct_limit = BitSubset::max_universe;

/// Predicate on an explicit element list; the universe plays no role.
bool is_member(FamilyKind kind, const std::vector<int>& elements);
bool is_member(FamilyKind kind, const BitSubset& s);

/// Every member of the family inside 2^[n], ascending by mask.
std::vector<BitSubset> members(FamilyKind kind, int n, int guard = default_enumeration_guard);

CountTriangle count_triangle(FamilyKind kind, int n_max, int guard = default_enumeration_guard);

/// Closed forms for k in {1, 2} in the primitive, coprime and product-free families.
std::int64_t small_count_closed_form(FamilyKind kind, int n, int k);

/// Maximal members of F cap 2^[n], ascending by mask.
std::vector<BitSubset> maximal_members(FamilyKind kind, int n,
                                       int guard = default_enumeration_guard);

struct PartitionClasses {
    /// Classes ordered by their smallest mask; each class ascending by mask.
    std::vector<std::vector<BitSubset>> classes;
    /// Nonempty total intersection of each class.
    std::vector<BitSubset> cores;
    int m() const { return static_cast<int>(classes.size()); }
};

struct FailureWitness {
    std::vector<BitSubset> component;
    BitSubset first;
    BitSubset second;
};

using PartitionResult = std::variant<PartitionClasses, FailureWitness>;

PartitionResult partition_components(FamilyKind kind, int n,
                                     int guard = default_enumeration_guard);
PartitionResult partition_components(const std::vector<BitSubset>& maximal);

} // namespace settop
