#include "hooklab/multipoly.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace hooklab {

bool GrlexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

namespace {

struct Registry {
    std::mutex mutex;
    std::unordered_map<std::string, int> ranks;
};

Registry& registry() {
    static Registry r;
    return r;
}

} // namespace

int variable_rank(const std::string& name) {
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mutex);
    auto it = reg.ranks.find(name);
    if (it != reg.ranks.end()) return it->second;
    const int rank = static_cast<int>(reg.ranks.size());
    reg.ranks.emplace(name, rank);
    return rank;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    if (a == b) return a;
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) { out.push_back(a[i]); ++i; ++j; continue; }
        if (variable_rank(a[i]) < variable_rank(b[j])) out.push_back(a[i++]);
        else out.push_back(b[j++]);
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

std::string ParamContext::fresh(const std::string& hint) {
    std::string name = hint;
    for (int suffix = 1; used_.count(name) != 0; ++suffix)
        name = hint + "_" + std::to_string(suffix);
    used_.insert(name);
    variable_rank(name);
    return name;
}

MultiPoly from_terms(std::vector<std::string> vars, MultiPoly::TermMap terms) {
    MultiPoly p;
    p.vars_ = std::move(vars);
    p.terms_ = std::move(terms);
    p.prune();
    return p;
}

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(ExpVec{}, c);
}

MultiPoly MultiPoly::variable(const std::string& name) {
    variable_rank(name);
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(ExpVec{1}, Rational(1));
    return p;
}

bool MultiPoly::is_one() const {
    return is_constant() && terms_.size() == 1 && terms_.begin()->second.is_one();
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return 0;
    const ExpVec& lead = terms_.rbegin()->first;
    return std::accumulate(lead.begin(), lead.end(), 0);
}

int MultiPoly::degree_in(const std::string& var) const {
    const auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    const std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    int deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[idx]);
    return deg;
}

bool MultiPoly::depends_on(const std::string& var) const {
    return std::find(vars_.begin(), vars_.end(), var) != vars_.end();
}

Rational MultiPoly::leading_coeff() const {
    if (terms_.empty()) return Rational(0);
    return terms_.rbegin()->second;
}

void MultiPoly::add_term(const ExpVec& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void MultiPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
    if (vars_.empty()) return;
    std::vector<char> used(vars_.size(), 0);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = 1;
    if (std::all_of(used.begin(), used.end(), [](char u) { return u != 0; })) return;
    std::vector<std::string> new_vars;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) { new_vars.push_back(vars_[i]); keep.push_back(i); }
    TermMap new_terms;
    for (const auto& [e, c] : terms_) {
        ExpVec ne(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
        new_terms.emplace(std::move(ne), c);
    }
    vars_ = std::move(new_vars);
    terms_ = std::move(new_terms);
}

MultiPoly MultiPoly::aligned_to(const std::vector<std::string>& new_vars) const {
    if (new_vars == vars_) return *this;
    std::vector<int> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        pos[i] = static_cast<int>(it - new_vars.begin());
    }
    MultiPoly out;
    out.vars_ = new_vars;
    for (const auto& [e, c] : terms_) {
        ExpVec ne(new_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    const auto vars = merge_vars(a.vars_, b.vars_);
    MultiPoly out = a.aligned_to(vars);
    const MultiPoly bb = b.aligned_to(vars);
    for (const auto& [e, c] : bb.terms_) out.add_term(e, c);
    out.prune();
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    return a + (-b);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly();
    if (a.is_constant()) return b.scaled(a.constant_value());
    if (b.is_constant()) return a.scaled(b.constant_value());
    const auto vars = merge_vars(a.vars_, b.vars_);
    const MultiPoly aa = a.aligned_to(vars);
    const MultiPoly bb = b.aligned_to(vars);
    MultiPoly out;
    out.vars_ = vars;
    ExpVec e(vars.size());
    for (const auto& [ea, ca] : aa.terms_) {
        for (const auto& [eb, cb] : bb.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    out.prune();
    return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return MultiPoly();
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, t] : terms_) out.terms_.emplace(e, t * c);
    return out;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
    MultiPoly result{Rational(1)};
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Rational MultiPoly::content() const {
    // No early exit: a later coefficient with a larger denominator still
    // lowers the content (gcd over Q, not Z).
    Rational g(0);
    for (const auto& [e, c] : terms_) g = Rational::gcd(g, c);
    return g;
}

MultiPoly MultiPoly::primitive_part() const {
    if (is_zero()) return *this;
    return scaled(content().reciprocal());
}

MultiPoly MultiPoly::substituted(const std::map<std::string, Rational>& bindings) const {
    bool relevant = false;
    for (const auto& [name, value] : bindings)
        if (depends_on(name)) { relevant = true; break; }
    if (!relevant) return *this;

    std::vector<int> bound(vars_.size(), -1);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto it = bindings.find(vars_[i]);
        if (it != bindings.end()) {
            bound[i] = static_cast<int>(values.size());
            values.push_back(it->second);
        }
    }
    std::vector<std::string> new_vars;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (bound[i] < 0) { new_vars.push_back(vars_[i]); keep.push_back(i); }

    MultiPoly out;
    out.vars_ = new_vars;
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (bound[i] >= 0 && e[i] != 0)
                coeff *= values[static_cast<std::size_t>(bound[i])].pow(e[i]);
        ExpVec ne(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
        out.add_term(ne, coeff);
    }
    out.prune();
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        const ExpVec& e = it->first;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? "-" : "+");
        }
        const Rational a = c.abs();
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << a.str();
        } else if (a.is_one()) {
            os << mono;
        } else {
            os << a.str() << "*" << mono;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd / exact division
// ---------------------------------------------------------------------------

namespace {

// Univariate view: dense coefficient list in one chosen variable, with
// coefficients that are polynomials in the remaining variables.
using UniPoly = std::vector<MultiPoly>;

int uni_deg(const UniPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[static_cast<std::size_t>(i)].is_zero()) return i;
    return -1;
}

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly to_univariate(const MultiPoly& p, const std::string& main_var) {
    const auto& vars = p.vars();
    const auto it = std::find(vars.begin(), vars.end(), main_var);
    const std::size_t idx = static_cast<std::size_t>(it - vars.begin());
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (i != idx) rest.push_back(vars[i]);

    UniPoly out(static_cast<std::size_t>(p.degree_in(main_var)) + 1);
    std::vector<MultiPoly::TermMap> buckets(out.size());
    for (const auto& [e, c] : p.terms()) {
        const int d = it == vars.end() ? 0 : e[idx];
        ExpVec ne;
        ne.reserve(rest.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != idx) ne.push_back(e[i]);
        buckets[static_cast<std::size_t>(d)].emplace(std::move(ne), c);
    }
    for (std::size_t d = 0; d < out.size(); ++d)
        out[d] = from_terms(rest, std::move(buckets[d]));
    return out;
}

MultiPoly from_univariate(const UniPoly& p, const std::string& main_var) {
    MultiPoly x = MultiPoly::variable(main_var);
    MultiPoly acc;
    for (int d = uni_deg(p); d >= 0; --d) {
        acc = acc * x + p[static_cast<std::size_t>(d)];
    }
    return acc;
}

UniPoly uni_mul_coeff(const UniPoly& p, const MultiPoly& c) {
    UniPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] * c;
    uni_trim(out);
    return out;
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly out = a;
    if (b.size() > out.size()) out.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] - b[i];
    uni_trim(out);
    return out;
}

// Pseudo-remainder of a by b in the main variable.
UniPoly uni_prem(UniPoly a, const UniPoly& b) {
    const int db = uni_deg(b);
    const MultiPoly& lb = b[static_cast<std::size_t>(db)];
    int da = uni_deg(a);
    while (da >= db && da >= 0) {
        const MultiPoly la = a[static_cast<std::size_t>(da)];
        UniPoly shifted(static_cast<std::size_t>(da - db), MultiPoly());
        for (std::size_t i = 0; i <= static_cast<std::size_t>(db); ++i)
            shifted.push_back(b[i] * la);
        a = uni_sub(uni_mul_coeff(a, lb), shifted);
        const int nda = uni_deg(a);
        da = nda;
    }
    return a;
}

MultiPoly uni_content(const UniPoly& p) {
    MultiPoly g;
    for (const auto& c : p) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

UniPoly uni_primitive(const UniPoly& p, const MultiPoly& cont) {
    UniPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i] = p[i].is_zero() ? MultiPoly() : poly_div_exact(p[i], cont);
    return out;
}

MultiPoly normalize_gcd_result(MultiPoly g) {
    g = g.primitive_part();
    if (g.leading_coeff().sign() < 0) g = -g;
    return g;
}

// Dense univariate gcd over Z (primitive PRS); inputs must be primitive with
// integer coefficients in the same single variable.
using DensePoly = std::vector<mpz_class>;

void dense_trim(DensePoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

DensePoly dense_from(const MultiPoly& p) {
    DensePoly out(static_cast<std::size_t>(p.total_degree()) + 1, mpz_class(0));
    for (const auto& [e, c] : p.terms())
        out[e.empty() ? 0 : static_cast<std::size_t>(e[0])] = c.num();
    return out;
}

MultiPoly dense_to(const DensePoly& p, const std::string& var) {
    bool has_var = false;
    for (std::size_t d = 1; d < p.size(); ++d)
        if (p[d] != 0) has_var = true;
    MultiPoly::TermMap terms;
    for (std::size_t d = 0; d < p.size(); ++d) {
        if (p[d] == 0) continue;
        terms.emplace(has_var ? ExpVec{static_cast<int>(d)} : ExpVec{}, Rational(p[d]));
    }
    return from_terms(has_var ? std::vector<std::string>{var} : std::vector<std::string>{},
                      std::move(terms));
}

void dense_make_primitive(DensePoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0 || g == 1) return;
    for (auto& c : p) c /= g;
}

DensePoly dense_gcd(DensePoly a, DensePoly b) {
    dense_trim(a);
    dense_trim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (true) {
        // r = prem(a, b)
        const std::size_t db = b.size() - 1;
        const mpz_class lb = b.back();
        DensePoly r = a;
        while (!r.empty() && r.size() - 1 >= db) {
            const mpz_class lr = r.back();
            const std::size_t shift = r.size() - 1 - db;
            for (auto& c : r) c *= lb;
            for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= lr * b[i];
            dense_trim(r);
        }
        if (r.empty()) break;
        dense_make_primitive(r);
        a = std::move(b);
        b = std::move(r);
        if (b.size() == 1) return {mpz_class(1)};
    }
    dense_make_primitive(b);
    if (sgn(b.back()) < 0)
        for (auto& c : b) c = -c;
    return b;
}

} // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.is_zero() ? MultiPoly() : normalize_gcd_result(b);
    if (b.is_zero()) return normalize_gcd_result(a);
    if (a.is_constant() || b.is_constant()) return MultiPoly(Rational(1));
    if (a == b) return normalize_gcd_result(a);

    const MultiPoly pa = a.primitive_part();
    const MultiPoly pb = b.primitive_part();
    const auto vars = merge_vars(pa.vars(), pb.vars());
    if (vars.size() == 1)
        return normalize_gcd_result(
            dense_to(dense_gcd(dense_from(pa), dense_from(pb)), vars.front()));
    const std::string main_var = vars.front();

    if (!pa.depends_on(main_var) || !pb.depends_on(main_var)) {
        // One side is free of the main variable: gcd divides the content of
        // the other side with respect to it.
        const MultiPoly& free_side = pa.depends_on(main_var) ? pb : pa;
        const MultiPoly& other = pa.depends_on(main_var) ? pa : pb;
        const MultiPoly cont = uni_content(to_univariate(other, main_var));
        return poly_gcd(cont, free_side);
    }

    UniPoly ua = to_univariate(pa, main_var);
    UniPoly ub = to_univariate(pb, main_var);
    const MultiPoly cont_a = uni_content(ua);
    const MultiPoly cont_b = uni_content(ub);
    ua = uni_primitive(ua, cont_a);
    ub = uni_primitive(ub, cont_b);
    const MultiPoly cont_gcd = poly_gcd(cont_a, cont_b);

    // Coprime fast path: specialize every non-main variable at integers that
    // keep one leading coefficient nonzero; a constant univariate gcd of the
    // images proves the primitive parts coprime (their gcd's leading
    // coefficient divides the surviving one, so its degree is preserved).
    {
        const MultiPoly& lead_a = ua[static_cast<std::size_t>(uni_deg(ua))];
        const MultiPoly& lead_b = ub[static_cast<std::size_t>(uni_deg(ub))];
        for (long base = 2; base <= 20; base += 3) {
            std::map<std::string, Rational> bind;
            long v = base;
            for (std::size_t i = 1; i < vars.size(); ++i) bind[vars[i]] = Rational(v++);
            const bool a_keeps_degree = !lead_a.substituted(bind).is_zero();
            if (!a_keeps_degree && lead_b.substituted(bind).is_zero()) continue;
            const MultiPoly image_a = (a_keeps_degree ? pa : pb).substituted(bind);
            const MultiPoly image_b = (a_keeps_degree ? pb : pa).substituted(bind);
            if (image_b.is_zero()) break;
            if (poly_gcd(image_a, image_b).is_constant())
                return normalize_gcd_result(cont_gcd);
            break;  // images share a factor: fall through to the PRS
        }
    }

    // Primitive PRS.
    UniPoly p = uni_deg(ua) >= uni_deg(ub) ? ua : ub;
    UniPoly q = uni_deg(ua) >= uni_deg(ub) ? ub : ua;
    while (true) {
        UniPoly r = uni_prem(p, q);
        if (uni_deg(r) < 0) break;
        r = uni_primitive(r, uni_content(r));
        p = std::move(q);
        q = std::move(r);
    }
    if (uni_deg(q) == 0) return normalize_gcd_result(cont_gcd);
    return normalize_gcd_result(cont_gcd * from_univariate(q, main_var));
}

bool try_poly_div_exact(const MultiPoly& a, const MultiPoly& b, MultiPoly& quotient) {
    if (b.is_zero()) return false;
    if (a.is_zero()) { quotient = MultiPoly(); return true; }
    if (b.is_constant()) { quotient = a.scaled(b.constant_value().reciprocal()); return true; }

    // Long division over one fixed variable list.
    const auto vars = merge_vars(a.vars(), b.vars());
    MultiPoly::TermMap rem = a.aligned_to(vars).terms();
    const MultiPoly bb_aligned = b.aligned_to(vars);
    const MultiPoly::TermMap& bb = bb_aligned.terms();
    const ExpVec eb = bb.rbegin()->first;
    const Rational lb = bb.rbegin()->second;

    MultiPoly::TermMap qterms;
    ExpVec qe(vars.size());
    ExpVec e(vars.size());
    while (!rem.empty()) {
        const auto lead = rem.rbegin();
        const ExpVec& ea = lead->first;
        for (std::size_t i = 0; i < qe.size(); ++i) {
            qe[i] = ea[i] - eb[i];
            if (qe[i] < 0) return false;
        }
        const Rational qc = lead->second / lb;
        qterms.emplace(qe, qc);
        for (const auto& [e2, c2] : bb) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = qe[i] + e2[i];
            const Rational delta = qc * c2;
            const auto it = rem.find(e);
            if (it == rem.end()) {
                rem.emplace(e, -delta);
            } else {
                it->second -= delta;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
    }
    quotient = from_terms(vars, std::move(qterms));
    return true;
}

MultiPoly poly_div_exact(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly q;
    if (!try_poly_div_exact(a, b, q))
        throw ArithmeticError("inexact polynomial division");
    return q;
}

} // namespace hooklab
