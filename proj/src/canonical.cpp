#include "octlin/canonical.hpp"

#include <algorithm>

#include "octlin/sampling.hpp"
#include "octlin/solver.hpp"

namespace octlin {

// ---------------------------------------------------------------- singles

Octonion make_canonical_single(SingleFamily family, const Scalar& alpha1,
                               const std::optional<Scalar>& alpha8) {
    const Field& f = alpha1.field();
    switch (family) {
        case SingleFamily::E:
            return alpha1 * Octonion::one(f);
        case SingleFamily::Fbar: {
            if (!alpha8) throw ParameterViolation("diagonal family needs alpha8");
            if (!canonical_less(alpha1, *alpha8))
                throw ParameterViolation("diagonal family requires alpha1 < alpha8 "
                                         "in the tie-break order");
            return alpha1 * Octonion::e1(f) + *alpha8 * Octonion::e2(f);
        }
        case SingleFamily::K1:
            return alpha1 * Octonion::one(f) + Octonion::u(1, f);
    }
    throw Error("unreachable");
}

Octonion make_zero_norm_rep(ZeroNormRep rep, const Field& f,
                            const std::optional<Scalar>& alpha1) {
    switch (rep) {
        case ZeroNormRep::Zero:
            return Octonion::zero(f);
        case ZeroNormRep::ScalarE1: {
            if (!alpha1 || alpha1->is_zero())
                throw ParameterViolation("the scaled-idempotent representative needs alpha1 != 0");
            return *alpha1 * Octonion::e1(f);
        }
        case ZeroNormRep::U1:
            return Octonion::u(1, f);
    }
    throw Error("unreachable");
}

// ------------------------------------------------------------- membership

namespace {

bool vec_is(const Vec3& v, int a, int b, int c, const Field& f) {
    auto s = [&](int n) { return Scalar::integer(n, f); };
    return v[0] == s(a) && v[1] == s(b) && v[2] == s(c);
}

// Base coordinate patterns; alpha1, alpha8 unrestricted unless noted.
bool matches_base(char family, const Octonion& a) {
    const Field& f = a.field();
    const Vec3& u = a.u_part();
    const Vec3& v = a.v_part();
    switch (family) {
        case 'D': return u.is_zero() && v.is_zero();
        case 'E': return u.is_zero() && v.is_zero() && a.alpha() == a.beta();
        case 'F': return u.is_zero() && v.is_zero() && a.alpha() != a.beta();
        case 'K': return vec_is(u, 1, 0, 0, f) && v.is_zero();
        case 'L':
            return !u[0].is_zero() && u[1].is_zero() && u[2].is_zero() && v.is_zero();
        case 'M': return vec_is(u, 0, 1, 0, f) && v.is_zero();
        case 'N':
            return vec_is(u, 1, 0, 0, f) && !v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
        case 'P': return vec_is(u, 1, 0, 0, f) && vec_is(v, 0, 1, 0, f);
    }
    return false;
}

} // namespace

std::set<std::string> classify_membership(const Octonion& a) {
    std::set<std::string> tags;
    const Octonion t = a.transpose();
    const bool traceless = a.trace().is_zero();
    const bool diag_equal = a.alpha() == a.beta();
    const bool diag_leq = canonical_leq(a.alpha(), a.beta());
    for (char fam : {'D', 'E', 'F', 'K', 'L', 'M', 'N', 'P'}) {
        std::string name(1, fam);
        if (matches_base(fam, a)) {
            tags.insert(name);
            if (traceless) tags.insert(name + "0");
            if (diag_leq) tags.insert(name + "bar");
            if (diag_equal) tags.insert(name + "1");
        }
        if (matches_base(fam, t)) {
            tags.insert(name + "T");
            if (traceless) tags.insert(name + "0T");
            if (diag_equal) tags.insert(name + "1T");
        }
    }
    return tags;
}

// ------------------------------------------------------------------ pairs

std::string pair_case_name(PairCase c) {
    static const char* names[] = {"0",  "I",  "II",  "III", "IV",  "V",   "VI", "VII",
                                  "VIII", "IX", "X", "XI",  "XII", "XIII", "XIV"};
    return names[static_cast<int>(c)];
}

namespace {

Scalar required_nonzero(const std::optional<Scalar>& s, const char* name, const Field& f) {
    if (!s || s->is_zero())
        throw ParameterViolation(std::string(name) + " must be a nonzero parameter");
    if (s->field() != f) throw FieldMismatch(std::string(name) + " lies in the wrong field");
    return *s;
}

Scalar optional_or_zero(const std::optional<Scalar>& s, const char* name, const Field& f) {
    if (!s) return Scalar::zero(f);
    if (s->field() != f) throw FieldMismatch(std::string(name) + " lies in the wrong field");
    return *s;
}

} // namespace

std::pair<Octonion, Octonion> make_pair(PairCase c, const PairParams& p, const Field& f) {
    const Octonion zero = Octonion::zero(f);
    const Octonion E1 = Octonion::e1(f), E2 = Octonion::e2(f);
    const Octonion U1 = Octonion::u(1, f), U2 = Octonion::u(2, f);
    const Octonion V1 = Octonion::v(1, f), V2 = Octonion::v(2, f);

    auto diag_pair_constraints = [&](const Scalar& b1, const Scalar& b8) {
        if (!(b1 * b8).is_zero())
            throw ParameterViolation("beta1*beta8 must vanish");
        if (b1.is_zero() && b8.is_zero())
            throw ParameterViolation("(beta1, beta8) must not both vanish");
    };

    switch (c) {
        case PairCase::C0: return {zero, zero};
        case PairCase::CI: return {zero, required_nonzero(p.beta1, "beta1", f) * E1};
        case PairCase::CII: return {zero, U1};
        case PairCase::CIII: return {required_nonzero(p.alpha1, "alpha1", f) * E1, zero};
        case PairCase::CIV: return {U1, zero};
        case PairCase::CV: {
            Scalar a1 = required_nonzero(p.alpha1, "alpha1", f);
            Scalar b1 = optional_or_zero(p.beta1, "beta1", f);
            Scalar b8 = optional_or_zero(p.beta8, "beta8", f);
            diag_pair_constraints(b1, b8);
            return {a1 * E1, b1 * E1 + b8 * E2};
        }
        case PairCase::CVI: {
            Scalar a1 = required_nonzero(p.alpha1, "alpha1", f);
            Scalar b1 = optional_or_zero(p.beta1, "beta1", f);
            Scalar b8 = optional_or_zero(p.beta8, "beta8", f);
            if (!(b1 * b8).is_zero()) throw ParameterViolation("beta1*beta8 must vanish");
            return {a1 * E1, b1 * E1 + b8 * E2 + U1};
        }
        case PairCase::CVII: {
            Scalar a1 = required_nonzero(p.alpha1, "alpha1", f);
            Scalar b1 = optional_or_zero(p.beta1, "beta1", f);
            Scalar b8 = optional_or_zero(p.beta8, "beta8", f);
            if (!(b1 * b8).is_zero()) throw ParameterViolation("beta1*beta8 must vanish");
            return {a1 * E1, b1 * E1 + b8 * E2 + V1};
        }
        case PairCase::CVIII: {
            Scalar a1 = required_nonzero(p.alpha1, "alpha1", f);
            Scalar b1 = required_nonzero(p.beta1, "beta1", f);
            Scalar b8 = required_nonzero(p.beta8, "beta8", f);
            return {a1 * E1, b1 * E1 + b8 * E2 + U1 + (b1 * b8) * V1};
        }
        case PairCase::CIX: {
            Scalar a1 = required_nonzero(p.alpha1, "alpha1", f);
            Scalar b1 = optional_or_zero(p.beta1, "beta1", f);
            Scalar b8 = optional_or_zero(p.beta8, "beta8", f);
            if (!(b1 * b8).is_zero()) throw ParameterViolation("beta1*beta8 must vanish");
            return {a1 * E1, b1 * E1 + b8 * E2 + U1 + V2};
        }
        case PairCase::CX: {
            Scalar b1 = optional_or_zero(p.beta1, "beta1", f);
            Scalar b8 = optional_or_zero(p.beta8, "beta8", f);
            diag_pair_constraints(b1, b8);
            return {U1, b1 * E1 + b8 * E2};
        }
        case PairCase::CXI:
            return {U1, required_nonzero(p.beta2, "beta2", f) * U1};
        case PairCase::CXII: {
            Scalar b1 = optional_or_zero(p.beta1, "beta1", f);
            Scalar b5 = required_nonzero(p.beta5, "beta5", f);
            return {U1, b1 * E1 + b5 * V1};
        }
        case PairCase::CXIII: {
            Scalar b1 = optional_or_zero(p.beta1, "beta1", f);
            return {U1, b1 * E1 + U2};
        }
        case PairCase::CXIV: return {U1, V2};
    }
    throw Error("unreachable");
}

std::vector<PairCase> classify_pair(const Octonion& a, const Octonion& b) {
    const Field& f = a.field();
    std::vector<PairCase> out;
    auto s = [&](int n) { return Scalar::integer(n, f); };

    auto is_zero = [](const Octonion& o) { return o.is_zero(); };
    auto is_scaled_e1 = [&](const Octonion& o, bool nonzero) {
        bool shape = o.u_part().is_zero() && o.v_part().is_zero() && o.beta().is_zero();
        return shape && (!nonzero || !o.alpha().is_zero());
    };
    auto is_u1 = [&](const Octonion& o) { return o == Octonion::u(1, f); };
    auto is_diag = [](const Octonion& o) { return o.u_part().is_zero() && o.v_part().is_zero(); };
    auto diag_ok = [](const Octonion& o) {
        return (o.alpha() * o.beta()).is_zero() && !(o.alpha().is_zero() && o.beta().is_zero());
    };

    if (is_zero(a) && is_zero(b)) out.push_back(PairCase::C0);
    if (is_zero(a) && is_scaled_e1(b, true)) out.push_back(PairCase::CI);
    if (is_zero(a) && is_u1(b)) out.push_back(PairCase::CII);
    if (is_scaled_e1(a, true) && is_zero(b)) out.push_back(PairCase::CIII);
    if (is_u1(a) && is_zero(b)) out.push_back(PairCase::CIV);

    if (is_scaled_e1(a, true)) {
        const Vec3& u = b.u_part();
        const Vec3& v = b.v_part();
        Scalar prod = b.alpha() * b.beta();
        if (is_diag(b) && diag_ok(b)) out.push_back(PairCase::CV);
        if (vec_is(u, 1, 0, 0, f) && v.is_zero() && prod.is_zero()) out.push_back(PairCase::CVI);
        if (u.is_zero() && vec_is(v, 1, 0, 0, f) && prod.is_zero()) out.push_back(PairCase::CVII);
        if (vec_is(u, 1, 0, 0, f) && !b.alpha().is_zero() && !b.beta().is_zero() &&
            v[0] == prod && v[1].is_zero() && v[2].is_zero())
            out.push_back(PairCase::CVIII);
        if (vec_is(u, 1, 0, 0, f) && vec_is(v, 0, 1, 0, f) && prod.is_zero())
            out.push_back(PairCase::CIX);
    }
    if (is_u1(a)) {
        const Vec3& u = b.u_part();
        const Vec3& v = b.v_part();
        if (is_diag(b) && diag_ok(b)) out.push_back(PairCase::CX);
        if (b.alpha().is_zero() && b.beta().is_zero() && v.is_zero() && !u[0].is_zero() &&
            u[1].is_zero() && u[2].is_zero())
            out.push_back(PairCase::CXI);
        if (u.is_zero() && b.beta().is_zero() && !v[0].is_zero() && v[1].is_zero() &&
            v[2].is_zero())
            out.push_back(PairCase::CXII);
        if (vec_is(u, 0, 1, 0, f) && v.is_zero() && b.beta().is_zero())
            out.push_back(PairCase::CXIII);
        if (b == Octonion::v(2, f)) out.push_back(PairCase::CXIV);
    }
    (void)s;
    return out;
}

// -------------------------------------------------------- solution families

AffExpr AffExpr::gamma(int i, const Scalar& coeff) {
    AffExpr e = zero(coeff.field());
    e.gamma_coeff[i] = coeff;
    return e;
}

AffExpr AffExpr::freevar(int i, const Scalar& coeff) {
    AffExpr e = zero(coeff.field());
    e.x_coeff[i] = coeff;
    return e;
}

AffExpr AffExpr::operator+(const AffExpr& o) const {
    AffExpr r = *this;
    r.constant += o.constant;
    for (const auto& [i, c] : o.gamma_coeff) {
        auto it = r.gamma_coeff.find(i);
        if (it == r.gamma_coeff.end())
            r.gamma_coeff[i] = c;
        else
            it->second += c;
    }
    for (const auto& [i, c] : o.x_coeff) {
        auto it = r.x_coeff.find(i);
        if (it == r.x_coeff.end())
            r.x_coeff[i] = c;
        else
            it->second += c;
    }
    return r;
}

AffExpr AffExpr::operator-() const { return scaled(-Scalar::one(constant.field())); }

AffExpr AffExpr::operator-(const AffExpr& o) const { return *this + (-o); }

AffExpr AffExpr::scaled(const Scalar& s) const {
    AffExpr r = *this;
    r.constant *= s;
    for (auto& [i, c] : r.gamma_coeff) c *= s;
    for (auto& [i, c] : r.x_coeff) c *= s;
    return r;
}

Scalar AffExpr::eval(const std::map<int, Scalar>& gammas, const std::map<int, Scalar>& xs) const {
    Scalar v = constant;
    for (const auto& [i, c] : gamma_coeff) {
        auto it = gammas.find(i);
        if (it != gammas.end()) v += c * it->second;
    }
    for (const auto& [i, c] : x_coeff) {
        auto it = xs.find(i);
        if (it != xs.end()) v += c * it->second;
    }
    return v;
}

Octonion SolutionFamily::c_of(const std::map<int, Scalar>& gammas) const {
    std::array<Scalar, 8> coords{};
    for (int k = 0; k < 8; ++k)
        coords[static_cast<std::size_t>(k)] = c_expr[static_cast<std::size_t>(k)].eval(gammas, {});
    return Octonion::from_coords(coords);
}

AffineFlat SolutionFamily::solution_of(const std::map<int, Scalar>& gammas) const {
    const Field& f = a.field();
    std::array<Scalar, 8> pc{};
    for (int k = 0; k < 8; ++k)
        pc[static_cast<std::size_t>(k)] = x_expr[static_cast<std::size_t>(k)].eval(gammas, {});
    std::vector<Octonion> dirs;
    for (int i : free_indices) {
        std::array<Scalar, 8> dc{};
        for (auto& c : dc) c = Scalar::zero(f);
        for (int k = 0; k < 8; ++k) {
            auto it = x_expr[static_cast<std::size_t>(k)].x_coeff.find(i);
            if (it != x_expr[static_cast<std::size_t>(k)].x_coeff.end())
                dc[static_cast<std::size_t>(k)] = it->second;
        }
        dirs.push_back(Octonion::from_coords(dc));
    }
    return AffineFlat::make(Octonion::from_coords(pc), dirs);
}

AffineFlat SolutionFamily::admissible_c() const {
    const Field& f = a.field();
    std::array<Scalar, 8> pc{};
    for (int k = 0; k < 8; ++k)
        pc[static_cast<std::size_t>(k)] = c_expr[static_cast<std::size_t>(k)].eval({}, {});
    std::vector<Octonion> dirs;
    for (int i : gamma_indices) {
        std::array<Scalar, 8> dc{};
        for (auto& c : dc) c = Scalar::zero(f);
        for (int k = 0; k < 8; ++k) {
            auto it = c_expr[static_cast<std::size_t>(k)].gamma_coeff.find(i);
            if (it != c_expr[static_cast<std::size_t>(k)].gamma_coeff.end())
                dc[static_cast<std::size_t>(k)] = it->second;
        }
        dirs.push_back(Octonion::from_coords(dc));
    }
    return AffineFlat::make(Octonion::from_coords(pc), dirs);
}

Octonion SolutionFamily::eval_equation(const Octonion& x) const {
    return theorem == Theorem::AXB ? (a * x) * b : a * (b * x);
}

std::vector<std::string> family_case_ids(Theorem) {
    return {"V.1", "V.2", "VI.1", "VI.2", "VII.1", "VII.2", "VIII",
            "IX.1", "IX.2", "X.1",  "X.2",  "XI",    "XII",  "XIII", "XIV"};
}

namespace {

struct CaseKey {
    std::string roman; // "V".."XIV"
    int sub;           // 0 when the case has no subcases
};

CaseKey parse_case_id(const std::string& id) {
    auto dotpos = id.find('.');
    if (dotpos == std::string::npos) return {id, 0};
    return {id.substr(0, dotpos), std::stoi(id.substr(dotpos + 1))};
}

} // namespace

SolutionFamily make_family(Theorem thm, const std::string& case_id, const PairParams& p,
                           const Field& f) {
    auto ids = family_case_ids(thm);
    if (std::find(ids.begin(), ids.end(), case_id) == ids.end())
        throw ParameterViolation("unknown case id: " + case_id);
    CaseKey key = parse_case_id(case_id);

    const Scalar one = Scalar::one(f);
    auto g = [&](int i) { return AffExpr::gamma(i, one); };
    auto gs = [&](int i, const Scalar& s) { return AffExpr::gamma(i, s); };
    auto x = [&](int i) { return AffExpr::freevar(i, one); };
    auto xs = [&](int i, const Scalar& s) { return AffExpr::freevar(i, s); };

    SolutionFamily fam;
    fam.theorem = thm;
    fam.case_id = case_id;
    for (int k = 0; k < 8; ++k) {
        fam.c_expr[static_cast<std::size_t>(k)] = AffExpr::zero(f);
        fam.x_expr[static_cast<std::size_t>(k)] = x(k + 1); // free unless overridden
    }
    // 1-based coordinate accessors into the tables.
    auto C = [&fam](int i) -> AffExpr& { return fam.c_expr[static_cast<std::size_t>(i - 1)]; };
    auto X = [&fam](int i) -> AffExpr& { return fam.x_expr[static_cast<std::size_t>(i - 1)]; };

    const bool needs_alpha = key.roman == "V" || key.roman == "VI" || key.roman == "VII" ||
                             key.roman == "VIII" || key.roman == "IX";
    Scalar a1 = needs_alpha ? required_nonzero(p.alpha1, "alpha1", f) : Scalar::one(f);
    Scalar ia = a1.inverse();

    // Pair construction mirrors make_pair with the subcase specialization.
    PairParams q = p;
    const bool axb = thm == Theorem::AXB;
    if (key.roman == "V" || key.roman == "X") {
        if (key.sub == 1) q.beta1 = Scalar::zero(f);
        else q.beta8 = Scalar::zero(f);
    } else if (key.roman == "VI" || key.roman == "VII" || key.roman == "IX") {
        if (key.sub == 1) q.beta1 = Scalar::zero(f);
        else q.beta8 = Scalar::zero(f);
    }

    if (key.roman == "V") {
        auto [a, b] = make_pair(PairCase::CV, q, f);
        fam.a = a; fam.b = b;
        if (key.sub == 1) {
            Scalar b8 = required_nonzero(q.beta8, "beta8", f);
            Scalar iab = (a1 * b8).inverse();
            if (axb) {
                C(2) = g(2); C(3) = g(3); C(4) = g(4);
                X(2) = gs(2, iab); X(3) = gs(3, iab); X(4) = gs(4, iab);
            } else {
                // c = 0, every x admissible
            }
        } else {
            Scalar b1 = required_nonzero(q.beta1, "beta1", f);
            Scalar iab = (a1 * b1).inverse();
            if (axb) {
                C(1) = g(1);
                X(1) = gs(1, iab);
            } else {
                C(1) = g(1); C(2) = g(2); C(3) = g(3); C(4) = g(4);
                X(1) = gs(1, iab); X(2) = gs(2, iab); X(3) = gs(3, iab); X(4) = gs(4, iab);
            }
        }
    } else if (key.roman == "VI") {
        if (axb && key.sub == 1) required_nonzero(q.beta8, "beta8", f);
        if (!axb && key.sub == 2) required_nonzero(q.beta1, "beta1", f);
        auto [a, b] = make_pair(PairCase::CVI, q, f);
        fam.a = a; fam.b = b;
        Scalar b1 = optional_or_zero(q.beta1, "beta1", f);
        Scalar b8 = optional_or_zero(q.beta8, "beta8", f);
        if (axb) {
            if (key.sub == 1) {
                C(2) = g(2); C(3) = gs(7, -b8); C(4) = gs(6, b8); C(6) = g(6); C(7) = g(7);
                X(1) = gs(2, ia) + xs(2, -b8); X(3) = gs(7, -ia); X(4) = gs(6, ia);
            } else {
                C(1) = gs(2, b1); C(2) = g(2); C(6) = g(6); C(7) = g(7);
                X(1) = gs(2, ia); X(3) = gs(7, -ia); X(4) = gs(6, ia);
            }
        } else {
            if (key.sub == 1) {
                C(1) = g(1); C(2) = g(2);
                X(5) = gs(1, ia); X(8) = gs(2, ia);
            } else {
                Scalar iab = (a1 * b1).inverse();
                C(1) = g(1); C(2) = g(2); C(3) = g(3); C(4) = g(4);
                X(3) = gs(3, iab); X(4) = gs(4, iab);
                X(5) = gs(1, ia) + xs(1, -b1); X(8) = gs(2, ia) + xs(2, -b1);
            }
        }
    } else if (key.roman == "VII") {
        if (axb && key.sub == 1) required_nonzero(q.beta8, "beta8", f);
        if (!axb && key.sub == 2) required_nonzero(q.beta1, "beta1", f);
        auto [a, b] = make_pair(PairCase::CVII, q, f);
        fam.a = a; fam.b = b;
        Scalar b1 = optional_or_zero(q.beta1, "beta1", f);
        Scalar b8 = optional_or_zero(q.beta8, "beta8", f);
        if (axb) {
            if (key.sub == 1) {
                Scalar iab = (a1 * b8).inverse();
                C(1) = g(1); C(2) = gs(1, b8); C(3) = g(3); C(4) = g(4);
                X(2) = gs(1, ia); X(3) = gs(3, iab); X(4) = gs(4, iab);
            } else {
                C(1) = g(1);
                X(2) = gs(1, ia) + xs(1, -b1);
            }
        } else {
            if (key.sub == 1) {
                C(3) = g(3); C(4) = g(4);
                X(6) = gs(4, -ia); X(7) = gs(3, ia);
            } else {
                Scalar iab = (a1 * b1).inverse();
                C(1) = g(1); C(2) = g(2); C(3) = g(3); C(4) = g(4);
                X(1) = gs(1, iab); X(2) = gs(2, iab);
                X(6) = gs(4, -ia) + xs(4, b1); X(7) = gs(3, ia) + xs(3, -b1);
            }
        }
    } else if (key.roman == "VIII") {
        auto [a, b] = make_pair(PairCase::CVIII, q, f);
        fam.a = a; fam.b = b;
        Scalar b1 = required_nonzero(q.beta1, "beta1", f);
        Scalar b8 = required_nonzero(q.beta8, "beta8", f);
        if (axb) {
            C(1) = gs(2, b1); C(2) = g(2); C(3) = gs(7, -b8); C(4) = gs(6, b8);
            C(6) = g(6); C(7) = g(7);
            X(1) = gs(2, ia) + xs(2, -b8); X(3) = gs(7, -ia); X(4) = gs(6, ia);
        } else {
            Scalar iab = (a1 * b1).inverse();
            C(1) = g(1); C(2) = g(2); C(3) = g(3); C(4) = g(4);
            X(3) = gs(3, iab) + xs(7, -b8); X(4) = gs(4, iab) + xs(6, b8);
            X(5) = gs(1, ia) + xs(1, -b1); X(8) = gs(2, ia) + xs(2, -b1);
        }
    } else if (key.roman == "IX") {
        if (axb && key.sub == 1) required_nonzero(q.beta8, "beta8", f);
        if (!axb && key.sub == 2) required_nonzero(q.beta1, "beta1", f);
        auto [a, b] = make_pair(PairCase::CIX, q, f);
        fam.a = a; fam.b = b;
        Scalar b1 = optional_or_zero(q.beta1, "beta1", f);
        Scalar b8 = optional_or_zero(q.beta8, "beta8", f);
        if (axb) {
            if (key.sub == 1) {
                C(1) = g(1); C(2) = g(2); C(3) = gs(1, b8); C(4) = gs(6, b8);
                C(6) = g(6); C(7) = gs(1, -one);
                X(1) = gs(2, ia) + xs(2, -b8); X(3) = gs(1, ia); X(4) = gs(6, ia);
            } else {
                C(1) = g(1); C(2) = g(2); C(6) = g(6); C(7) = gs(1, -one) + gs(2, b1);
                X(1) = gs(2, ia); X(3) = gs(1, ia) + gs(2, -b1 * ia); X(4) = gs(6, ia);
            }
        } else {
            if (key.sub == 1) {
                C(1) = g(1); C(2) = g(2); C(4) = g(1); // c4 repeats gamma1
                X(5) = gs(1, ia); X(8) = gs(2, ia) + x(7);
            } else {
                Scalar iab = (a1 * b1).inverse();
                C(1) = g(1); C(2) = g(2); C(3) = g(3); C(4) = g(4);
                X(3) = gs(3, iab); X(4) = gs(4, iab) + gs(1, -iab) + x(1);
                X(5) = gs(1, ia) + xs(1, -b1);
                X(8) = gs(2, ia) + xs(2, -b1) + x(7);
            }
        }
    } else if (key.roman == "X") {
        auto [a, b] = make_pair(PairCase::CX, q, f);
        fam.a = a; fam.b = b;
        if (key.sub == 1) {
            Scalar b8 = required_nonzero(q.beta8, "beta8", f);
            Scalar ib = b8.inverse();
            if (axb) {
                C(2) = g(2);
                X(8) = gs(2, ib);
            } else {
                C(1) = g(1); C(2) = g(2);
                X(5) = gs(1, ib); X(8) = gs(2, ib);
            }
        } else {
            Scalar b1 = required_nonzero(q.beta1, "beta1", f);
            Scalar ib = b1.inverse();
            if (axb) {
                C(1) = g(1); C(6) = g(6); C(7) = g(7);
                X(3) = gs(7, ib); X(4) = gs(6, -ib); X(5) = gs(1, ib);
            } else {
                C(6) = g(6); C(7) = g(7);
                X(3) = gs(7, ib); X(4) = gs(6, -ib);
            }
        }
    } else if (key.roman == "XI") {
        Scalar b2 = required_nonzero(p.beta2, "beta2", f);
        auto [a, b] = make_pair(PairCase::CXI, q, f);
        fam.a = a; fam.b = b;
        if (axb) {
            C(2) = g(2);
            X(5) = gs(2, b2.inverse());
        } else {
            // c = 0, every x admissible
        }
    } else if (key.roman == "XII") {
        Scalar b5 = required_nonzero(p.beta5, "beta5", f);
        auto [a, b] = make_pair(PairCase::CXII, q, f);
        fam.a = a; fam.b = b;
        Scalar b1 = optional_or_zero(q.beta1, "beta1", f);
        Scalar ib = b5.inverse();
        if (axb) {
            C(1) = g(1); C(3) = g(3); C(4) = g(4);
            C(6) = gs(4, b1 * ib); C(7) = gs(3, -b1 * ib);
            X(3) = gs(3, -ib); X(4) = gs(4, -ib);
            X(8) = gs(1, ib) + xs(5, -b1 * ib);
        } else {
            C(1) = g(1); C(2) = g(2); C(6) = g(6); C(7) = g(7);
            X(1) = gs(1, ib); X(2) = gs(2, ib);
            X(6) = gs(6, ib) + xs(4, b1 * ib); X(7) = gs(7, ib) + xs(3, -b1 * ib);
        }
    } else if (key.roman == "XIII") {
        auto [a, b] = make_pair(PairCase::CXIII, q, f);
        fam.a = a; fam.b = b;
        Scalar b1 = optional_or_zero(q.beta1, "beta1", f);
        if (axb) {
            C(1) = gs(3, b1); C(3) = g(3); C(6) = gs(8, b1); C(7) = g(7); C(8) = g(8);
            X(4) = gs(8, -one); X(5) = g(3); X(8) = g(7) + xs(3, -b1);
        } else {
            C(1) = g(1); C(6) = gs(1, -b1); C(7) = g(7);
            X(4) = g(1); X(8) = g(7) + xs(3, -b1);
        }
    } else { // XIV
        auto [a, b] = make_pair(PairCase::CXIV, q, f);
        fam.a = a; fam.b = b;
        if (axb) {
            C(2) = g(2);
            X(3) = g(2);
        } else {
            C(2) = g(2); C(6) = g(6);
            X(3) = g(2); X(5) = gs(6, -one);
        }
    }

    // Derive the symbol sets from the finished tables.
    std::set<int> gset, xset;
    for (int k = 0; k < 8; ++k) {
        for (const auto& [i, c] : fam.c_expr[static_cast<std::size_t>(k)].gamma_coeff)
            if (!c.is_zero()) gset.insert(i);
        for (const auto& [i, c] : fam.x_expr[static_cast<std::size_t>(k)].gamma_coeff)
            if (!c.is_zero()) gset.insert(i);
        for (const auto& [i, c] : fam.x_expr[static_cast<std::size_t>(k)].x_coeff)
            if (!c.is_zero()) xset.insert(i);
    }
    fam.gamma_indices.assign(gset.begin(), gset.end());
    fam.free_indices.assign(xset.begin(), xset.end());
    return fam;
}

PairParams draw_family_params(Theorem thm, const std::string& case_id, Rng& rng, const Field& f) {
    CaseKey key = parse_case_id(case_id);
    PairParams p;
    auto nz = [&] { return random_nonzero_scalar(rng, f, 9); };
    auto any = [&] { return random_scalar(rng, f, 9); };
    if (key.roman == "V" || key.roman == "VI" || key.roman == "VII" || key.roman == "VIII" ||
        key.roman == "IX")
        p.alpha1 = nz();
    if (key.roman == "V" || key.roman == "X") {
        if (key.sub == 1) p.beta8 = nz();
        else p.beta1 = nz();
    } else if (key.roman == "VI" || key.roman == "VII" || key.roman == "IX") {
        if (thm == Theorem::AXB) {
            if (key.sub == 1) p.beta8 = nz();
            else p.beta1 = any();
        } else {
            if (key.sub == 1) p.beta8 = any();
            else p.beta1 = nz();
        }
    } else if (key.roman == "VIII") {
        p.beta1 = nz();
        p.beta8 = nz();
    } else if (key.roman == "XI") {
        p.beta2 = nz();
    } else if (key.roman == "XII") {
        p.beta1 = any();
        p.beta5 = nz();
    } else if (key.roman == "XIII") {
        p.beta1 = any();
    }
    return p;
}

namespace {

// One verification trial; returns an explanation on failure.
std::string run_trial(const SolutionFamily& fam, Rng& rng) {
    const Field& f = fam.a.field();
    std::map<int, Scalar> gammas;
    for (int i : fam.gamma_indices) gammas[i] = random_scalar(rng, f, 9);

    Octonion c = fam.c_of(gammas);
    AffineFlat family_flat = fam.solution_of(gammas);

    if (!fam.a.norm().is_zero() || !fam.b.norm().is_zero())
        return "pair is not zero-norm";

    // (i) the stated solution substitutes back to the stated right side
    if (fam.eval_equation(family_flat.point()) != c)
        return "family point does not satisfy the equation, c=" + c.to_string();
    Octonion member = family_flat.point();
    for (const auto& dir : family_flat.basis())
        member = member + random_scalar(rng, f, 9) * dir;
    if (fam.eval_equation(member) != c)
        return "family member does not satisfy the equation, c=" + c.to_string();

    // (ii) the solver reproduces the family flat exactly
    SolveResult solved = fam.theorem == Theorem::AXB ? solve_axb(fam.a, fam.b, c)
                                                     : solve_abx(fam.a, fam.b, c);
    if (solved.flat != family_flat)
        return "solver flat (dim " + std::to_string(solved.flat.dim()) +
               ") differs from family flat (dim " + std::to_string(family_flat.dim()) + ")";
    if (!solved.classification.consistent)
        return "classification inconsistent: " + solved.classification.predicted_case;

    // (iii) dimension equals the free-variable count
    if (family_flat.dim() != static_cast<int>(fam.free_indices.size()))
        return "flat dim " + std::to_string(family_flat.dim()) + " != free count " +
               std::to_string(fam.free_indices.size());

    // (iv) solvability of an unrestricted right side matches the admissible flat
    Octonion probe = random_octonion(rng, f, 9);
    bool solvable = !(fam.theorem == Theorem::AXB ? solve_axb(fam.a, fam.b, probe)
                                                  : solve_abx(fam.a, fam.b, probe))
                         .flat.is_empty();
    if (solvable != fam.admissible_c().contains(probe))
        return "admissible-c flat disagrees with solvability for c=" + probe.to_string();

    return {};
}

VerifyReport run_verification(Theorem thm, const std::string& case_id, int trials,
                              std::uint64_t seed, const Field& f,
                              const SolutionFamily* fixed_family) {
    VerifyReport report;
    report.theorem = thm;
    report.case_id = case_id;
    report.trials = trials;
    report.records.resize(static_cast<std::size_t>(trials));

#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
        std::string witness;
        try {
            if (fixed_family) {
                witness = run_trial(*fixed_family, rng);
            } else {
                PairParams params = draw_family_params(thm, case_id, rng, f);
                SolutionFamily fam = make_family(thm, case_id, params, f);
                witness = run_trial(fam, rng);
            }
        } catch (const std::exception& e) {
            witness = std::string("exception: ") + e.what();
        }
        report.records[static_cast<std::size_t>(t)] = {static_cast<std::uint64_t>(t),
                                                       witness.empty(), witness};
    }
    for (const auto& r : report.records)
        if (!r.ok) ++report.violations;
    return report;
}

} // namespace

VerifyReport verify_family(const SolutionFamily& fam, int trials, std::uint64_t seed) {
    return run_verification(fam.theorem, fam.case_id, trials, seed, fam.a.field(), &fam);
}

VerifyReport verify_case(Theorem thm, const std::string& case_id, int trials, std::uint64_t seed,
                         const Field& f) {
    return run_verification(thm, case_id, trials, seed, f, nullptr);
}

} // namespace octlin
