#include "gspzeta/cosets.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "gspzeta/errors.hpp"

namespace gspzeta::cosets {

namespace {

int mod(int x, int p) {
    x %= p;
    return x < 0 ? x + p : x;
}

int inv_mod(int x, int p) {
    for (int y = 1; y < p; ++y) {
        if (mod(x * y, p) == 1) return y;
    }
    throw InvalidArgument("no inverse mod p");
}

// Smallest generator of F_p^x.
int unit_generator(int p) { return p == 2 ? 1 : 2; }

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Smaller id becomes the root, so roots are class minima.
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<std::size_t> parent_;
};

using Vec4 = std::array<int, 4>;

std::uint32_t vec_index(const Vec4& v, int p) {
    std::uint32_t idx = 0;
    for (int k = 3; k >= 0; --k) idx = idx * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(v[k]);
    return idx;
}

Vec4 normalize(Vec4 v, int p) {
    for (int k = 0; k < 4; ++k) {
        if (v[k] != 0) {
            const int s = inv_mod(v[k], p);
            for (auto& x : v) x = mod(x * s, p);
            break;
        }
    }
    return v;
}

std::vector<Vec4> all_vectors(int p) {
    std::vector<Vec4> out;
    const int n = p * p * p * p;
    for (int idx = 0; idx < n; ++idx) {
        Vec4 v{};
        int rest = idx;
        for (int k = 0; k < 4; ++k) {
            v[k] = rest % p;
            rest /= p;
        }
        out.push_back(v);
    }
    return out;
}

Vec4 row(const Mat4& g, int r) { return {g.at(r, 0), g.at(r, 1), g.at(r, 2), g.at(r, 3)}; }

int dot(const Vec4& a, const Vec4& b, int p) {
    int s = 0;
    for (int k = 0; k < 4; ++k) s += a[k] * b[k];
    return mod(s, p);
}

// Complete invariant of the left coset P4 g: the line through row 3 and the
// hyperplane spanned by rows 2..4 (as its normalized annihilator).
std::uint64_t coset_key(const Mat4& g) {
    const int p = g.p();
    const Vec4 line = normalize(row(g, 2), p);
    std::uint32_t annihilator = 0;
    bool found = false;
    for (const auto& w : all_vectors(p)) {
        if (w == Vec4{} || normalize(w, p) != w) continue;
        if (dot(row(g, 1), w, p) == 0 && dot(row(g, 2), w, p) == 0 && dot(row(g, 3), w, p) == 0) {
            annihilator = vec_index(w, p);
            found = true;
            break;
        }
    }
    if (!found) throw InvalidArgument("coset_key needs an invertible matrix");
    const auto n = static_cast<std::uint64_t>(p * p * p * p);
    return static_cast<std::uint64_t>(vec_index(line, p)) * n + annihilator;
}

// One representative per left P4-coset, built from (line, hyperplane) pairs.
std::vector<Mat4> coset_representatives(int p) {
    const auto vectors = all_vectors(p);
    std::vector<Vec4> projective;
    for (const auto& v : vectors) {
        if (v != Vec4{} && normalize(v, p) == v) projective.push_back(v);
    }
    std::vector<Mat4> reps;
    for (const auto& w : projective) {
        std::vector<Vec4> kernel;
        for (const auto& x : vectors) {
            if (dot(x, w, p) == 0) kernel.push_back(x);
        }
        Vec4 outside{};
        for (const auto& x : vectors) {
            if (dot(x, w, p) != 0) {
                outside = x;
                break;
            }
        }
        for (const auto& line : projective) {
            if (dot(line, w, p) != 0) continue;
            // Complete {line} to a basis of ker(w) greedily.
            for (const auto& h1 : kernel) {
                bool done = false;
                for (const auto& h2 : kernel) {
                    std::array<int, 16> e{};
                    for (int k = 0; k < 4; ++k) {
                        e[static_cast<std::size_t>(k)] = outside[k];
                        e[static_cast<std::size_t>(4 + k)] = h1[k];
                        e[static_cast<std::size_t>(8 + k)] = line[k];
                        e[static_cast<std::size_t>(12 + k)] = h2[k];
                    }
                    Mat4 g(p, e);
                    if (g.invertible()) {
                        reps.push_back(g);
                        done = true;
                        break;
                    }
                }
                if (done) break;
            }
        }
    }
    return reps;
}

Mat4 elementary(int p, int r, int c, int value) {
    Mat4 m = Mat4::identity(p);
    m.set(r, c, value);
    return m;
}

}  // namespace

Mat4::Mat4(int p, const std::array<int, 16>& entries) : p_(p) {
    require_supported_prime(p);
    for (std::size_t k = 0; k < 16; ++k) e_[k] = static_cast<std::uint8_t>(mod(entries[k], p));
}

Mat4 Mat4::identity(int p) {
    Mat4 m(p, {});
    for (int k = 0; k < 4; ++k) m.set(k, k, 1);
    return m;
}

Mat4 Mat4::unpack(int p, std::uint32_t key) {
    std::array<int, 16> e{};
    for (std::size_t k = 0; k < 16; ++k) e[k] = static_cast<int>((key >> (2 * k)) & 3U);
    return Mat4(p, e);
}

void Mat4::set(int r, int c, int value) { e_[static_cast<std::size_t>(4 * r + c)] = static_cast<std::uint8_t>(mod(value, p_)); }

int Mat4::det() const {
    std::array<std::array<int, 4>, 4> a{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) a[r][c] = at(r, c);
    }
    int d = 1;
    for (int c = 0; c < 4; ++c) {
        int pivot = -1;
        for (int r = c; r < 4; ++r) {
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            d = mod(-d, p_);
        }
        d = mod(d * a[c][c], p_);
        const int inv = inv_mod(a[c][c], p_);
        for (int r = c + 1; r < 4; ++r) {
            const int f = mod(a[r][c] * inv, p_);
            for (int k = c; k < 4; ++k) a[r][k] = mod(a[r][k] - f * a[c][k], p_);
        }
    }
    return d;
}

Mat4 Mat4::transpose() const {
    Mat4 t(p_, {});
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) t.set(c, r, at(r, c));
    }
    return t;
}

std::uint32_t Mat4::pack() const {
    std::uint32_t key = 0;
    for (std::size_t k = 0; k < 16; ++k) key |= static_cast<std::uint32_t>(e_[k]) << (2 * k);
    return key;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 out(a.p_, {});
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            int s = 0;
            for (int k = 0; k < 4; ++k) s += a.at(r, k) * b.at(k, c);
            out.set(r, c, s);
        }
    }
    return out;
}

std::string Mat4::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int r = 0; r < 4; ++r) {
        os << (r ? ",[" : "[");
        for (int c = 0; c < 4; ++c) os << (c ? "," : "") << at(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

GroupEnumeration::GroupEnumeration(int p, std::vector<std::uint32_t> sorted_keys)
    : p_(p), keys_(std::move(sorted_keys)) {}

std::optional<std::size_t> GroupEnumeration::index_of(const Mat4& m) const {
    const auto key = m.pack();
    const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - keys_.begin());
}

void require_supported_prime(int p) {
    if (p != 2 && p != 3) throw Unsupported("only p = 2 and p = 3 are supported, got " + std::to_string(p));
}

std::uint64_t gl4_order(int p) {
    const std::uint64_t q = static_cast<std::uint64_t>(p);
    const std::uint64_t q4 = q * q * q * q;
    return (q4 - 1) * (q4 - q) * (q4 - q * q) * (q4 - q * q * q);
}

std::uint64_t gsp4_order(int p) {
    const std::uint64_t q = static_cast<std::uint64_t>(p);
    return q * q * q * q * (q * q - 1) * (q * q * q * q - 1) * (q - 1);
}

std::uint64_t p4_order(int p) {
    // g11, g33 units; row 1 tail and the (2,3), (4,3) entries free; GL2 on {2,4}.
    const std::uint64_t q = static_cast<std::uint64_t>(p);
    const std::uint64_t gl2 = (q * q - 1) * (q * q - q);
    return (q - 1) * (q - 1) * q * q * q * q * q * gl2;
}

Mat4 symplectic_form(int p) {
    return Mat4(p, {0, 0, 1, 0,   //
                    0, 0, 0, 1,   //
                    -1, 0, 0, 0,  //
                    0, -1, 0, 0});
}

Mat4 t1(int p) {
    return Mat4(p, {0, 1, 0, 0,  //
                    1, 0, 0, 0,  //
                    0, 0, 1, 0,  //
                    0, 0, 0, 1});
}

Mat4 t2(int p) {
    return Mat4(p, {1, 0, 0, 0,  //
                    0, 0, 0, 1,  //
                    0, 0, 1, 0,  //
                    0, -1, 0, 0});
}

std::optional<int> similitude(const Mat4& g) {
    const int p = g.p();
    const Mat4 j = symplectic_form(p);
    const Mat4 form = g.transpose() * j * g;
    const int mu = form.at(0, 2);
    if (mu == 0) return std::nullopt;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (form.at(r, c) != mod(mu * j.at(r, c), p)) return std::nullopt;
        }
    }
    return mu;
}

bool in_p4(const Mat4& g) {
    if (g.at(1, 0) != 0 || g.at(2, 0) != 0 || g.at(3, 0) != 0) return false;
    if (g.at(2, 1) != 0 || g.at(2, 3) != 0) return false;
    return g.invertible();
}

std::vector<Mat4> p4_generators(int p) {
    require_supported_prime(p);
    std::vector<Mat4> gens;
    for (auto [r, c] : std::initializer_list<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {3, 1}, {3, 2}}) {
        gens.push_back(elementary(p, r, c, 1));
    }
    if (p != 2) {
        for (int k = 0; k < 4; ++k) gens.push_back(elementary(p, k, k, unit_generator(p)));
    }
    return gens;
}

std::vector<Mat4> gsp4_generators(int p) {
    require_supported_prime(p);
    std::vector<Mat4> gens;
    // Unipotent [[1, S], [0, 1]] and [[1, 0], [S, 1]] for S in {E11, E22, E12 + E21}.
    for (bool upper : {true, false}) {
        const int ro = upper ? 0 : 2;
        const int co = upper ? 2 : 0;
        Mat4 a = Mat4::identity(p);
        a.set(ro, co, 1);
        Mat4 b = Mat4::identity(p);
        b.set(ro + 1, co + 1, 1);
        Mat4 c = Mat4::identity(p);
        c.set(ro, co + 1, 1);
        c.set(ro + 1, co, 1);
        gens.insert(gens.end(), {a, b, c});
    }
    // Levi diag(A, A^{-T}) for A = [[1,1],[0,1]] and diag(u, 1).
    gens.push_back(Mat4(p, {1, 1, 0, 0,   //
                            0, 1, 0, 0,   //
                            0, 0, 1, 0,   //
                            0, 0, -1, 1}));
    if (p != 2) {
        const int u = unit_generator(p);
        Mat4 d = Mat4::identity(p);
        d.set(0, 0, u);
        d.set(2, 2, inv_mod(u, p));
        gens.push_back(d);
        // Similitude diag(1, 1, mu, mu).
        Mat4 s = Mat4::identity(p);
        s.set(2, 2, u);
        s.set(3, 3, u);
        gens.push_back(s);
    }
    return gens;
}

std::vector<std::uint32_t> generated_group(const std::vector<Mat4>& generators) {
    if (generators.empty()) throw InvalidArgument("empty generating set");
    const int p = generators.front().p();
    std::unordered_set<std::uint32_t> seen;
    std::deque<Mat4> frontier;
    const Mat4 one = Mat4::identity(p);
    seen.insert(one.pack());
    frontier.push_back(one);
    while (!frontier.empty()) {
        const Mat4 g = frontier.front();
        frontier.pop_front();
        for (const auto& s : generators) {
            const Mat4 h = g * s;
            if (seen.insert(h.pack()).second) frontier.push_back(h);
        }
    }
    std::vector<std::uint32_t> keys(seen.begin(), seen.end());
    std::sort(keys.begin(), keys.end());
    return keys;
}

GroupEnumeration enumerate_gl4(int p) {
    require_supported_prime(p);
    std::vector<std::uint32_t> keys;
    keys.reserve(gl4_order(p));
    std::array<int, 16> digits{};
    const std::uint64_t total = [p] {
        std::uint64_t t = 1;
        for (int k = 0; k < 16; ++k) t *= static_cast<std::uint64_t>(p);
        return t;
    }();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (auto& d : digits) {
            d = static_cast<int>(rest % static_cast<std::uint64_t>(p));
            rest /= static_cast<std::uint64_t>(p);
        }
        const Mat4 m(p, digits);
        if (m.invertible()) keys.push_back(m.pack());
    }
    std::sort(keys.begin(), keys.end());
    return GroupEnumeration(p, std::move(keys));
}

std::vector<std::size_t> filter_gsp4(const GroupEnumeration& group) {
    std::vector<std::size_t> ids;
    for (std::size_t id = 0; id < group.size(); ++id) {
        if (similitude(group.element(id))) ids.push_back(id);
    }
    return ids;
}

std::vector<std::size_t> filter_p4(const GroupEnumeration& group) {
    std::vector<std::size_t> ids;
    for (std::size_t id = 0; id < group.size(); ++id) {
        if (in_p4(group.element(id))) ids.push_back(id);
    }
    return ids;
}

namespace {

CosetPartitionReport partition_full(int p) {
    if (p != 2) throw Infeasible("full enumeration is limited to p = 2; use the quotient method");
    const GroupEnumeration group = enumerate_gl4(p);
    const auto left = p4_generators(p);
    const auto right = gsp4_generators(p);
    UnionFind classes(group.size());
    std::vector<Mat4> elements;
    elements.reserve(group.size());
    for (std::size_t id = 0; id < group.size(); ++id) elements.push_back(group.element(id));
    for (std::size_t id = 0; id < group.size(); ++id) {
        for (const auto& a : left) classes.unite(id, *group.index_of(a * elements[id]));
        for (const auto& b : right) classes.unite(id, *group.index_of(elements[id] * b));
    }

    CosetPartitionReport report;
    report.p = p;
    report.method = PartitionMethod::Full;
    std::map<std::size_t, std::uint64_t> sizes;
    for (std::size_t id = 0; id < group.size(); ++id) ++sizes[classes.find(id)];
    for (const auto& [root, size] : sizes) {
        report.class_sizes.push_back(size);
        report.representatives.push_back(elements[root]);
    }
    report.class_count = sizes.size();

    bool closed = true;
    for (std::size_t id = 0; id < group.size() && closed; ++id) {
        const auto root = classes.find(id);
        for (const auto& a : left) closed = closed && classes.find(*group.index_of(a * elements[id])) == root;
        for (const auto& b : right) closed = closed && classes.find(*group.index_of(elements[id] * b)) == root;
    }
    report.closure_verified = closed;

    const auto id_one = *group.index_of(Mat4::identity(p));
    const auto id_t1 = *group.index_of(t1(p));
    report.identity_t1_distinct = classes.find(id_one) != classes.find(id_t1);
    bool contains = true;
    for (auto id : filter_p4(group)) contains = contains && classes.find(id) == classes.find(id_one);
    for (auto id : filter_gsp4(group)) contains = contains && classes.find(id) == classes.find(id_one);
    report.identity_class_contains_subgroups = contains;
    return report;
}

CosetPartitionReport partition_quotient(int p) {
    require_supported_prime(p);
    const auto reps = coset_representatives(p);
    std::map<std::uint64_t, std::size_t> index;
    for (std::size_t k = 0; k < reps.size(); ++k) {
        if (!index.emplace(coset_key(reps[k]), k).second) {
            throw Infeasible("coset representatives are not distinct");
        }
    }
    const auto right = gsp4_generators(p);
    UnionFind orbits(reps.size());
    for (std::size_t k = 0; k < reps.size(); ++k) {
        for (const auto& b : right) orbits.unite(k, index.at(coset_key(reps[k] * b)));
    }

    CosetPartitionReport report;
    report.p = p;
    report.method = PartitionMethod::Quotient;
    report.quotient_size = reps.size();
    // Label classes by their smallest packed member among the representatives.
    std::map<std::size_t, std::pair<std::uint32_t, std::uint64_t>> by_root;
    for (std::size_t k = 0; k < reps.size(); ++k) {
        auto [it, fresh] = by_root.try_emplace(orbits.find(k), reps[k].pack(), 0);
        it->second.first = std::min(it->second.first, reps[k].pack());
        ++it->second.second;
    }
    std::vector<std::pair<std::uint32_t, std::uint64_t>> classes;
    for (const auto& [root, data] : by_root) classes.push_back(data);
    std::sort(classes.begin(), classes.end());
    for (const auto& [key, cosets] : classes) {
        report.representatives.push_back(Mat4::unpack(p, key));
        report.class_sizes.push_back(cosets * p4_order(p));
    }
    report.class_count = classes.size();

    bool closed = true;
    for (std::size_t k = 0; k < reps.size(); ++k) {
        for (const auto& b : right) closed = closed && orbits.find(index.at(coset_key(reps[k] * b))) == orbits.find(k);
    }
    report.closure_verified = closed;

    const auto one = index.at(coset_key(Mat4::identity(p)));
    report.identity_t1_distinct = orbits.find(one) != orbits.find(index.at(coset_key(t1(p))));
    bool contains = true;
    for (const auto& a : p4_generators(p)) contains = contains && index.at(coset_key(a)) == one;
    for (const auto& b : right) contains = contains && orbits.find(index.at(coset_key(b))) == orbits.find(one);
    report.identity_class_contains_subgroups = contains;
    return report;
}

}  // namespace

CosetPartitionReport double_coset_partition(int p, PartitionMethod method) {
    require_supported_prime(p);
    return method == PartitionMethod::Full ? partition_full(p) : partition_quotient(p);
}

}  // namespace gspzeta::cosets
