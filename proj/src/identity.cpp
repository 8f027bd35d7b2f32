#include "novikov/identity.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <thread>

namespace novikov {

namespace {

// preorder serialization; 0 marks an inner node
void key_rec(const Monomial& m, int node, std::vector<int>& out) {
    const auto& nd = m.nodes[node];
    if (nd.var > 0) {
        out.push_back(nd.var);
        return;
    }
    out.push_back(0);
    key_rec(m, nd.left, out);
    key_rec(m, nd.right, out);
}

std::vector<int> key(const Monomial& m) {
    std::vector<int> out;
    if (!m.nodes.empty()) key_rec(m, m.root(), out);
    return out;
}

std::string str_rec(const Monomial& m, int node) {
    const auto& nd = m.nodes[node];
    if (nd.var > 0) return "x" + std::to_string(nd.var);
    return "(" + str_rec(m, nd.left) + "*" + str_rec(m, nd.right) + ")";
}

}  // namespace

std::string Monomial::str() const { return nodes.empty() ? "1" : str_rec(*this, root()); }

bool operator<(const Monomial& a, const Monomial& b) { return key(a) < key(b); }
bool operator==(const Monomial& a, const Monomial& b) { return key(a) == key(b); }

namespace {

Monomial join(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.nodes = a.nodes;
    int offset = static_cast<int>(m.nodes.size());
    for (const auto& nd : b.nodes) {
        Monomial::Node c = nd;
        if (c.var == 0) {
            c.left += offset;
            c.right += offset;
        }
        m.nodes.push_back(c);
    }
    m.nodes.push_back({0, static_cast<int>(a.nodes.size()) - 1,
                       static_cast<int>(m.nodes.size()) - 1});
    return m;
}

// formal linear combination of monomials; the empty monomial is the scalar 1
using FormalSum = std::vector<std::pair<mpq_class, Monomial>>;

FormalSum scale(FormalSum s, const mpq_class& c) {
    for (auto& t : s) t.first *= c;
    return s;
}

FormalSum add(FormalSum a, const FormalSum& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

FormalSum mul(const FormalSum& a, const FormalSum& b) {
    FormalSum r;
    for (const auto& [ca, ma] : a) {
        for (const auto& [cb, mb] : b) {
            mpq_class c = ca * cb;
            if (ma.nodes.empty()) {
                r.emplace_back(c, mb);
            } else if (mb.nodes.empty()) {
                r.emplace_back(c, ma);
            } else {
                r.emplace_back(c, join(ma, mb));
            }
        }
    }
    return r;
}

FormalSum collect(const FormalSum& s) {
    std::map<std::vector<int>, std::pair<mpq_class, Monomial>> acc;
    for (const auto& [c, m] : s) {
        auto k = key(m);
        auto it = acc.find(k);
        if (it == acc.end()) {
            acc.emplace(std::move(k), std::make_pair(c, m));
        } else {
            it->second.first += c;
        }
    }
    FormalSum out;
    for (auto& [k, cm] : acc) {
        cm.first.canonicalize();
        if (cm.first != 0) out.emplace_back(std::move(cm.first), std::move(cm.second));
    }
    return out;
}

struct Parser {
    std::string text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("identity parse error at offset " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    mpz_class parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return mpz_class(text.substr(start, pos - start));
    }

    FormalSum parse_atom() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpq_class q(parse_int());
            if (eat('/')) q /= mpq_class(parse_int());
            q.canonicalize();
            return {{q, Monomial{}}};
        }
        if (c == 'x') {
            ++pos;
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
                fail("expected variable index after 'x'");
            }
            long v = parse_int().get_si();
            if (v < 1 || v > 7) fail("variable index must be in 1..7");
            Monomial m;
            m.nodes.push_back({static_cast<int>(v), -1, -1});
            return {{mpq_class(1), m}};
        }
        if (eat('[')) {
            FormalSum a = parse_expr();
            expect(',');
            FormalSum b = parse_expr();
            expect(']');
            return add(mul(a, b), scale(mul(b, a), -1));
        }
        if (eat('(')) {
            FormalSum a = parse_expr();
            if (eat(',')) {
                FormalSum b = parse_expr();
                expect(',');
                FormalSum d = parse_expr();
                expect(')');
                // associator (a,b,d) = (ab)d - a(bd)
                return add(mul(mul(a, b), d), scale(mul(a, mul(b, d)), -1));
            }
            expect(')');
            return a;
        }
        fail("unexpected character");
    }

    FormalSum parse_product() {
        FormalSum r = parse_atom();
        while (eat('*')) r = mul(r, parse_atom());
        return r;
    }

    FormalSum parse_expr() {
        bool neg = false;
        if (eat('-')) {
            neg = true;
        } else {
            eat('+');
        }
        FormalSum r = parse_product();
        if (neg) r = scale(std::move(r), -1);
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                FormalSum t = parse_product();
                r = add(std::move(r), c == '-' ? scale(std::move(t), -1) : std::move(t));
            } else {
                return r;
            }
        }
    }
};

int monomial_arity(const Monomial& m, std::vector<int>& counts) {
    int maxv = 0;
    for (const auto& nd : m.nodes) {
        if (nd.var > 0) {
            if (nd.var > static_cast<int>(counts.size())) counts.resize(nd.var, 0);
            ++counts[nd.var - 1];
            maxv = std::max(maxv, nd.var);
        }
    }
    return maxv;
}

}  // namespace

bool is_multilinear(const Identity& id) {
    for (const auto& [c, m] : id.terms) {
        std::vector<int> counts;
        int maxv = monomial_arity(m, counts);
        if (maxv != id.arity) return false;
        for (int v = 0; v < id.arity; ++v) {
            if (counts[v] != 1) return false;
        }
    }
    return true;
}

Identity parse_identity(const std::string& name, const std::string& text) {
    Parser p{text};
    FormalSum lhs = p.parse_expr();
    if (p.eat('=')) {
        FormalSum rhs = p.parse_expr();
        lhs = add(std::move(lhs), scale(std::move(rhs), -1));
    }
    if (p.peek() != '\0') p.fail("trailing input");

    Identity id;
    id.name = name;
    id.terms = collect(lhs);
    int arity = 0;
    for (const auto& [c, m] : id.terms) {
        std::vector<int> counts;
        arity = std::max(arity, monomial_arity(m, counts));
    }
    id.arity = arity;
    if (arity == 0 && !id.terms.empty()) {
        throw ParseError("identity '" + name + "' reduces to a nonzero constant");
    }
    if (!is_multilinear(id)) {
        throw ParseError("identity '" + name + "' is not multilinear");
    }
    return id;
}

namespace {

Element eval_monomial(const Algebra& a, const Monomial& m, int node,
                      const std::vector<int>& assignment) {
    const auto& nd = m.nodes[node];
    if (nd.var > 0) return a.basis_element(assignment[nd.var - 1]);
    return multiply(a, eval_monomial(a, m, nd.left, assignment),
                    eval_monomial(a, m, nd.right, assignment));
}

}  // namespace

Verdict check_identity(const Algebra& a, const Identity& id, int workers,
                       bool override_dim_guard) {
    const Field& f = a.field();
    if (id.requires_char_not_2 && f.characteristic() == 2) {
        throw HypothesisViolation("identity '" + id.name + "' assumes characteristic != 2");
    }
    if (id.arity >= 7 && a.dim() > kSevenVarDimGuard && !override_dim_guard) {
        throw DomainError("identity '" + id.name + "' has " + std::to_string(id.arity) +
                          " variables; dim " + std::to_string(a.dim()) + " exceeds the guard (" +
                          std::to_string(kSevenVarDimGuard) + "); pass the override to force");
    }

    std::vector<Scalar> coeffs;
    coeffs.reserve(id.terms.size());
    for (const auto& [c, m] : id.terms) coeffs.push_back(f.from_rational(c));

    const int n = a.dim();
    const int k = id.arity;
    long total = 1;
    for (int i = 0; i < k; ++i) total *= n;
    if (workers < 1) workers = 1;

    auto eval_tuple = [&](long t) -> Element {
        std::vector<int> assignment(k);
        for (int v = k - 1; v >= 0; --v) {  // x1 slowest
            assignment[v] = static_cast<int>(t % n);
            t /= n;
        }
        Element sum(a);
        for (size_t term = 0; term < id.terms.size(); ++term) {
            sum = sum + eval_monomial(a, id.terms[term].second, id.terms[term].second.root(),
                                      assignment)
                            .scaled(coeffs[term]);
        }
        return sum;
    };

    auto scan = [&](long lo, long hi) -> std::optional<std::pair<long, Element>> {
        for (long t = lo; t < hi; ++t) {
            Element v = eval_tuple(t);
            if (!v.is_zero()) return std::make_pair(t, std::move(v));
        }
        return std::nullopt;
    };

    std::optional<std::pair<long, Element>> best;
    if (workers == 1 || total < 2) {
        best = scan(0, total);
    } else {
        std::vector<std::optional<std::pair<long, Element>>> results(workers);
        std::vector<std::thread> pool;
        long chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            long lo = w * chunk, hi = std::min(total, lo + chunk);
            pool.emplace_back([&, w, lo, hi] { results[w] = scan(lo, hi); });
        }
        for (auto& th : pool) th.join();
        for (auto& r : results) {
            if (r && (!best || r->first < best->first)) best = r;
        }
    }

    if (!best) return Verdict{true, std::nullopt};
    std::vector<int> tuple(k);
    long t = best->first;
    for (int v = k - 1; v >= 0; --v) {
        tuple[v] = static_cast<int>(t % n);
        t /= n;
    }
    return Verdict{false, Witness{"identity " + id.name, std::move(tuple),
                                  std::make_shared<Element>(std::move(best->second))}};
}

Verdict is_lie_metabelian(const Algebra& a) {
    return check_identity(a, identity_catalog().at("g1"));
}

const std::map<std::string, Identity>& identity_catalog() {
    static const std::map<std::string, Identity> catalog = [] {
        std::map<std::string, Identity> c;
        auto put = [&](const std::string& name, const std::string& text, bool char2 = false) {
            Identity id = parse_identity(name, text);
            id.requires_char_not_2 = char2;
            c.emplace(name, std::move(id));
        };
        put("f1", "(x1,x2,x3) - (x2,x1,x3)");
        put("f2", "(x1*x2)*x3 - (x1*x3)*x2");
        put("f3", "[[x1,x2],x3] + [[x2,x3],x1] + [[x3,x1],x2]");
        put("f4", "[x1,x2]*x3 + [x2,x3]*x1 + [x3,x1]*x2");
        put("f5", "x1*[x2,x3] + x2*[x3,x1] + x3*[x1,x2]");
        put("f6", "x1*[x2,x3] = (x1,x3,x2) - (x1,x2,x3)");
        put("f7", "(x3,x1,x2) = [x1*x2,x3] - [x1,x3]*x2");
        put("f8", "(x1*x2,x3,x4) = (x1,x3,x4)*x2");
        put("f9", "(x1,x2*x3,x4) = (x1,x2,x4)*x3");
        put("f10",
            "(x1,x2,x3*x4) = (x1,x2*x3,x4) - (x1*x2,x3,x4) + x1*(x2,x3,x4) + (x1,x2,x3)*x4");
        put("f11",
            "(x1,x2,x3*x4) = (x1,x2,x4)*x3 - (x1,x3,x4)*x2 + x1*(x2,x3,x4) + (x1,x2,x3)*x4");
        put("f12", "(x1,x2,x3) = 1/2*[x1*x3,x2] - 1/2*[x1,x2*x3]", true);
        put("f13", "[x1,x2]*x3 = 1/2*[x1*x3,x2] + 1/2*[x1,x2*x3]", true);
        put("f14",
            "x3*[x1,x2] = [[x3,x1],x2] + [x1,[x3,x2]] + 1/2*[x1*x3,x2] + 1/2*[x1,x2*x3]", true);
        put("g1", "[[x1,x2],[x3,x4]]");
        put("g2", "([x1,x2],[x3,x4],x5)");
        put("g3", "(x1,[x2,x3],x4)*[x5,x6]");
        put("g4", "([x1,x2]*[x3,x4],x5,x6)");
        put("g5", "([x1,x2]*[x3,x4])*(x5,x6,x7)");
        Identity jac = c.at("f3");
        jac.name = "jacobi";
        c.emplace("jacobi", std::move(jac));
        return c;
    }();
    return catalog;
}

}  // namespace novikov
