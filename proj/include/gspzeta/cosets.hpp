#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gspzeta::cosets {

/// 4x4 matrix over F_p, p in {2, 3}. Entries are kept reduced to [0, p).
class Mat4 {
public:
    Mat4() = default;
    Mat4(int p, const std::array<int, 16>& entries);
    static Mat4 identity(int p);
    /// Inverse of pack().
    static Mat4 unpack(int p, std::uint32_t key);

    int p() const noexcept { return p_; }
    int at(int row, int col) const { return e_[static_cast<std::size_t>(4 * row + col)]; }
    void set(int row, int col, int value);

    int det() const;
    bool invertible() const { return det() != 0; }
    Mat4 transpose() const;
    /// Two bits per entry, row-major, entry (0,0) in the lowest bits.
    std::uint32_t pack() const;

    friend Mat4 operator*(const Mat4& a, const Mat4& b);
    friend bool operator==(const Mat4& a, const Mat4& b) { return a.p_ == b.p_ && a.e_ == b.e_; }

    std::string to_string() const;

private:
    int p_ = 2;
    std::array<std::uint8_t, 16> e_{};
};

/// All elements of GL4(F_p) in increasing packed-key order; the index in this
/// order is the element id.
class GroupEnumeration {
public:
    GroupEnumeration(int p, std::vector<std::uint32_t> sorted_keys);

    int p() const noexcept { return p_; }
    std::size_t size() const noexcept { return keys_.size(); }
    Mat4 element(std::size_t id) const { return Mat4::unpack(p_, keys_.at(id)); }
    std::optional<std::size_t> index_of(const Mat4& m) const;

private:
    int p_;
    std::vector<std::uint32_t> keys_;
};

void require_supported_prime(int p);

/// prod_{i<4} (p^4 - p^i)
std::uint64_t gl4_order(int p);
/// p^4 (p^2 - 1)(p^4 - 1)(p - 1)
std::uint64_t gsp4_order(int p);
std::uint64_t p4_order(int p);

/// The antisymmetric form [[0, 1_2], [-1_2, 0]].
Mat4 symplectic_form(int p);
Mat4 t1(int p);
Mat4 t2(int p);

/// Similitude factor mu with g^T J g = mu J, or nullopt when g is not in GSp4.
std::optional<int> similitude(const Mat4& g);
bool in_p4(const Mat4& g);

/// Generating sets used by the partition methods.
std::vector<Mat4> p4_generators(int p);
std::vector<Mat4> gsp4_generators(int p);
/// Closure of a generating set under multiplication (packed keys, sorted).
std::vector<std::uint32_t> generated_group(const std::vector<Mat4>& generators);

GroupEnumeration enumerate_gl4(int p);
std::vector<std::size_t> filter_gsp4(const GroupEnumeration& group);
std::vector<std::size_t> filter_p4(const GroupEnumeration& group);

enum class PartitionMethod { Full, Quotient };

struct CosetPartitionReport {
    int p = 2;
    PartitionMethod method = PartitionMethod::Full;
    std::size_t class_count = 0;
    std::vector<std::uint64_t> class_sizes;  // in elements of GL4(F_p)
    std::vector<Mat4> representatives;       // smallest member of each class
    bool identity_t1_distinct = false;
    // Full method: the identity class contains all of P4 and GSp4.
    // Quotient method: the identity coset is fixed by every GSp4 generator
    // applied to every P4 generator image.
    bool identity_class_contains_subgroups = false;
    bool closure_verified = false;
    std::uint64_t quotient_size = 0;  // number of P4 cosets (quotient method)
};

/// Partitions GL4(F_p) into P4 x GSp4 double cosets. Full enumeration is
/// limited to p = 2 (Infeasible otherwise).
CosetPartitionReport double_coset_partition(int p, PartitionMethod method);

}  // namespace gspzeta::cosets
