#include "octlin/oracle.hpp"

#include "octlin/eqparse.hpp"
#include "octlin/solver.hpp"

namespace octlin {

namespace {

constexpr int kSampleCap = 16;
constexpr int kChunks = 64;

using FpOct = std::array<std::int64_t, 8>;

// Zorn product on raw representatives mod p. Intermediate magnitudes stay
// far below 2^63 for p <= 251.
FpOct fp_mul(const FpOct& a, const FpOct& b, std::int64_t p) {
    auto m = [p](std::int64_t v) {
        std::int64_t r = v % p;
        return r < 0 ? r + p : r;
    };
    FpOct r;
    r[0] = m(a[0] * b[0] + a[1] * b[4] + a[2] * b[5] + a[3] * b[6]);
    r[1] = m(a[0] * b[1] + b[7] * a[1] - (a[5] * b[6] - a[6] * b[5]));
    r[2] = m(a[0] * b[2] + b[7] * a[2] - (a[6] * b[4] - a[4] * b[6]));
    r[3] = m(a[0] * b[3] + b[7] * a[3] - (a[4] * b[5] - a[5] * b[4]));
    r[4] = m(b[0] * a[4] + a[7] * b[4] + (a[2] * b[3] - a[3] * b[2]));
    r[5] = m(b[0] * a[5] + a[7] * b[5] + (a[3] * b[1] - a[1] * b[3]));
    r[6] = m(b[0] * a[6] + a[7] * b[6] + (a[1] * b[2] - a[2] * b[1]));
    r[7] = m(a[7] * b[7] + a[4] * b[1] + a[5] * b[2] + a[6] * b[3]);
    return r;
}

FpOct to_fp(const Octonion& a) {
    FpOct r;
    for (int k = 0; k < 8; ++k) r[static_cast<std::size_t>(k)] = a.coord(k).fp_value();
    return r;
}

// Tree compiled to index form with constants as raw coordinates.
struct CompiledTree {
    struct Node {
        bool is_var = false;
        FpOct value{};
        int left = -1, right = -1;
    };
    std::vector<Node> nodes;
    int root = -1;
    std::int64_t p = 0;

    FpOct eval(int at, const FpOct& x) const {
        const Node& n = nodes[static_cast<std::size_t>(at)];
        if (n.left < 0) return n.is_var ? x : n.value;
        return fp_mul(eval(n.left, x), eval(n.right, x), p);
    }
    FpOct eval(const FpOct& x) const { return eval(root, x); }
};

int compile_node(const MonomialTree& t, CompiledTree& out) {
    CompiledTree::Node n;
    if (t.is_product()) {
        n.left = compile_node(t.left(), out);
        n.right = compile_node(t.right(), out);
    } else if (t.is_variable()) {
        n.is_var = true;
    } else {
        n.value = to_fp(t.constant_value());
    }
    out.nodes.push_back(n);
    return static_cast<int>(out.nodes.size()) - 1;
}

CompiledTree compile_tree(const MonomialTree& w, int p) {
    CompiledTree ct;
    ct.p = p;
    ct.root = compile_node(w, ct);
    return ct;
}

void validate(const MonomialTree& w, const Octonion& c, int p) {
    if (p != 2 && p != 3 && p != 5)
        throw FieldTooLarge("enumeration supports p in {2,3,5}, got " + std::to_string(p));
    if (c.field() != Field::prime(p))
        throw FieldMismatch("right side is not in Fp:" + std::to_string(p));
    for (const auto& a : w.constant_leaves())
        if (a.field() != Field::prime(p))
            throw FieldMismatch("coefficient is not in Fp:" + std::to_string(p));
}

std::uint64_t pow_u64(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

FpOct decode(std::uint64_t idx, std::int64_t p) {
    FpOct x;
    for (int k = 7; k >= 0; --k) {
        x[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(p));
        idx /= static_cast<std::uint64_t>(p);
    }
    return x;
}

// Odometer step in lexicographic order.
void advance(FpOct& x, std::int64_t p) {
    for (int k = 7; k >= 0; --k) {
        if (++x[static_cast<std::size_t>(k)] < p) return;
        x[static_cast<std::size_t>(k)] = 0;
    }
}

std::array<int, 8> to_sample(const FpOct& x) {
    std::array<int, 8> s;
    for (int k = 0; k < 8; ++k) s[static_cast<std::size_t>(k)] = static_cast<int>(x[static_cast<std::size_t>(k)]);
    return s;
}

struct ChunkCount {
    std::uint64_t count = 0;
    std::vector<std::array<int, 8>> samples;
};

ChunkCount scan_count(const CompiledTree& ct, const FpOct& target, std::uint64_t lo,
                      std::uint64_t hi) {
    ChunkCount out;
    FpOct x = decode(lo, ct.p);
    for (std::uint64_t idx = lo; idx < hi; ++idx, advance(x, ct.p)) {
        if (ct.eval(x) == target) {
            ++out.count;
            if (out.samples.size() < kSampleCap) out.samples.push_back(to_sample(x));
        }
    }
    return out;
}

// Flat converted to raw representatives for the pointwise walk.
struct FpFlat {
    bool is_empty = true;
    FpOct point{};
    std::vector<FpOct> rows;
    std::vector<int> leads;

    bool contains(const FpOct& x, std::int64_t p) const {
        if (is_empty) return false;
        FpOct r;
        for (int k = 0; k < 8; ++k) {
            std::int64_t d = (x[static_cast<std::size_t>(k)] - point[static_cast<std::size_t>(k)]) % p;
            r[static_cast<std::size_t>(k)] = d < 0 ? d + p : d;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::int64_t f = r[static_cast<std::size_t>(leads[i])];
            if (f == 0) continue;
            for (int k = 0; k < 8; ++k) {
                std::int64_t d = (r[static_cast<std::size_t>(k)] - f * rows[i][static_cast<std::size_t>(k)]) % p;
                r[static_cast<std::size_t>(k)] = d < 0 ? d + p : d;
            }
        }
        for (std::int64_t v : r)
            if (v != 0) return false;
        return true;
    }
};

FpFlat to_fp_flat(const AffineFlat& flat) {
    FpFlat out;
    if (flat.is_empty()) return out;
    out.is_empty = false;
    out.point = to_fp(flat.point());
    for (const auto& b : flat.basis()) {
        FpOct row = to_fp(b);
        int lead = 0;
        while (lead < 8 && row[static_cast<std::size_t>(lead)] == 0) ++lead;
        out.rows.push_back(row);
        out.leads.push_back(lead);
    }
    return out;
}

struct ChunkCompare {
    std::uint64_t count = 0;
    std::vector<std::array<int, 8>> samples;
    std::optional<std::uint64_t> discrepancy_idx;
};

ChunkCompare scan_compare(const CompiledTree& ct, const FpOct& target, const FpFlat& flat,
                          std::uint64_t lo, std::uint64_t hi) {
    ChunkCompare out;
    FpOct x = decode(lo, ct.p);
    for (std::uint64_t idx = lo; idx < hi; ++idx, advance(x, ct.p)) {
        bool solves = ct.eval(x) == target;
        if (solves) {
            ++out.count;
            if (out.samples.size() < kSampleCap) out.samples.push_back(to_sample(x));
        }
        if (!out.discrepancy_idx && solves != flat.contains(x, ct.p)) out.discrepancy_idx = idx;
    }
    return out;
}

std::pair<std::uint64_t, std::uint64_t> chunk_bounds(std::uint64_t total, int chunk) {
    std::uint64_t per = total / kChunks, extra = total % kChunks;
    std::uint64_t c = static_cast<std::uint64_t>(chunk);
    std::uint64_t lo = c * per + std::min(c, extra);
    std::uint64_t hi = lo + per + (c < extra ? 1 : 0);
    return {lo, hi};
}

EnumerationResult make_result(const MonomialTree& w, const Octonion& c, int p) {
    EnumerationResult res;
    res.p = p;
    res.equation = format_equation(w, c);
    return res;
}

} // namespace

EnumerationResult enumerate_solutions_serial(const MonomialTree& w, const Octonion& c, int p) {
    validate(w, c, p);
    CompiledTree ct = compile_tree(w, p);
    FpOct target = to_fp(c);
    EnumerationResult res = make_result(w, c, p);
    ChunkCount total = scan_count(ct, target, 0, pow_u64(static_cast<std::uint64_t>(p), 8));
    res.solution_count = total.count;
    res.samples = std::move(total.samples);
    return res;
}

EnumerationResult enumerate_solutions(const MonomialTree& w, const Octonion& c, int p) {
    validate(w, c, p);
    CompiledTree ct = compile_tree(w, p);
    FpOct target = to_fp(c);
    std::uint64_t total = pow_u64(static_cast<std::uint64_t>(p), 8);

    std::array<ChunkCount, kChunks> parts;
#pragma omp parallel for schedule(dynamic)
    for (int ch = 0; ch < kChunks; ++ch) {
        auto [lo, hi] = chunk_bounds(total, ch);
        parts[static_cast<std::size_t>(ch)] = scan_count(ct, target, lo, hi);
    }

    EnumerationResult res = make_result(w, c, p);
    for (const auto& part : parts) {
        res.solution_count += part.count;
        for (const auto& s : part.samples) {
            if (res.samples.size() >= kSampleCap) break;
            res.samples.push_back(s);
        }
    }
    return res;
}

OracleComparison compare_with_flat(const MonomialTree& w, const Octonion& c, int p,
                                   const AffineFlat& flat) {
    validate(w, c, p);
    CompiledTree ct = compile_tree(w, p);
    FpOct target = to_fp(c);
    FpFlat fpf = to_fp_flat(flat);
    std::uint64_t total = pow_u64(static_cast<std::uint64_t>(p), 8);

    std::array<ChunkCompare, kChunks> parts;
#pragma omp parallel for schedule(dynamic)
    for (int ch = 0; ch < kChunks; ++ch) {
        auto [lo, hi] = chunk_bounds(total, ch);
        parts[static_cast<std::size_t>(ch)] = scan_compare(ct, target, fpf, lo, hi);
    }

    OracleComparison cmp;
    cmp.enumeration = make_result(w, c, p);
    cmp.flat_dim = flat.dim();
    std::optional<std::uint64_t> first;
    for (const auto& part : parts) {
        cmp.enumeration.solution_count += part.count;
        for (const auto& s : part.samples) {
            if (cmp.enumeration.samples.size() >= kSampleCap) break;
            cmp.enumeration.samples.push_back(s);
        }
        if (!first && part.discrepancy_idx) first = part.discrepancy_idx;
    }
    if (first) cmp.first_discrepancy = to_sample(decode(*first, p));

    std::uint64_t expected = flat.is_empty() ? 0 : pow_u64(static_cast<std::uint64_t>(p), flat.dim());
    cmp.match = !first && cmp.enumeration.solution_count == expected;
    cmp.enumeration.matches_flat = cmp.match;
    return cmp;
}

OracleComparison compare_with_solver(const MonomialTree& w, const Octonion& c, int p) {
    SolveResult solved = solve_monomial(w, c);
    return compare_with_flat(w, c, p, solved.flat);
}

} // namespace octlin
