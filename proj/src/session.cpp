#include "paracalc/session.hpp"

#include <cctype>

#include "paracalc/canon.hpp"
#include "paracalc/errors.hpp"

namespace paracalc {

namespace {

// ---------------------------------------------------------------------------
// Tokenizer. Line-oriented: NEWLINE tokens terminate statements outside of
// braces; '#' comments run to end of line.

enum class Tok { Ident, Int, Punct, Arrow, Newline, End };

struct Token {
    Tok kind;
    std::string text;
    std::int64_t value = 0;
    int line = 1, col = 1;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Tok k, std::string t, std::int64_t v = 0) {
        out.push_back(Token{k, std::move(t), v, line, col});
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') { ++i; ++col; }
            continue;
        }
        if (c == '\n') {
            if (out.empty() || out.back().kind != Tok::Newline) push(Tok::Newline, "\\n");
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') { ++i; ++col; continue; }
        if (std::isalpha((unsigned char)c) || c == '_') {
            int c0 = col;
            std::string id;
            while (i < text.size() && (std::isalnum((unsigned char)text[i]) || text[i] == '_')) {
                id += text[i++];
                ++col;
            }
            out.push_back(Token{Tok::Ident, id, 0, line, c0});
            continue;
        }
        if (std::isdigit((unsigned char)c)) {
            int c0 = col;
            std::int64_t v = 0;
            std::string raw;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) {
                v = v * 10 + (text[i] - '0');
                raw += text[i++];
                ++col;
                if (v > (std::int64_t)1 << 60) throw ParseError("integer literal too large", line, c0);
            }
            out.push_back(Token{Tok::Int, raw, v, line, c0});
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            push(Tok::Arrow, "->");
            i += 2;
            col += 2;
            continue;
        }
        if (std::string("(){},;:=+-*/^").find(c) != std::string::npos) {
            push(Tok::Punct, std::string(1, c));
            ++i;
            ++col;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    push(Tok::End, "<eof>");
    return out;
}

// ---------------------------------------------------------------------------

struct SessionParser {
    std::vector<Token> toks;
    size_t pos = 0;
    Session s;

    explicit SessionParser(const std::string& text) : toks(tokenize(text)) {}

    const Token& peek(int ahead = 0) const {
        size_t p = pos + ahead;
        return p < toks.size() ? toks[p] : toks.back();
    }
    Token next() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }

    [[noreturn]] void fail(const std::string& msg, const Token& at) const {
        throw ParseError(msg, at.line, at.col);
    }

    void skip_newlines() {
        while (peek().kind == Tok::Newline) ++pos;
    }

    bool accept_punct(const std::string& p) {
        if (peek().kind == Tok::Punct && peek().text == p) { ++pos; return true; }
        return false;
    }
    void expect_punct(const std::string& p) {
        if (!accept_punct(p)) fail("expected '" + p + "'", peek());
    }
    std::string expect_ident(const char* what) {
        if (peek().kind != Tok::Ident) fail(std::string("expected ") + what, peek());
        return next().text;
    }
    void expect_keyword(const std::string& kw) {
        if (peek().kind != Tok::Ident || peek().text != kw) fail("expected '" + kw + "'", peek());
        ++pos;
    }
    void expect_statement_end() {
        if (peek().kind == Tok::End) return;
        if (peek().kind != Tok::Newline) fail("unexpected trailing input in statement", peek());
        ++pos;
    }

    // -- name management ----------------------------------------------------

    void declare(const std::string& name, const Token& at) {
        bool taken = s.charts.count(name) || s.vector_fields.count(name) || s.one_forms.count(name) ||
                     s.two_forms.count(name) || s.bivectors.count(name) || s.metrics.count(name) ||
                     s.endos.count(name) || s.structures.count(name) || s.maps.count(name);
        if (taken) fail("duplicate name '" + name + "'", at);
    }

    ChartPtr chart_ref(const std::string& name, const Token& at) const {
        auto it = s.charts.find(name);
        if (it == s.charts.end()) fail("undeclared chart '" + name + "'", at);
        return it->second;
    }

    // -- scalar expressions over a chart's coordinates ----------------------

    Expr scalar_sum(const ChartPtr& chart, const std::set<std::string>& extra = {}) {
        Expr e = scalar_product(chart, extra);
        while (true) {
            if (accept_punct("+")) e = e + scalar_product(chart, extra);
            else if (accept_punct("-")) e = e - scalar_product(chart, extra);
            else return e;
        }
    }

    Expr scalar_product(const ChartPtr& chart, const std::set<std::string>& extra) {
        Expr e = scalar_unary(chart, extra);
        while (true) {
            if (accept_punct("*")) {
                e = e * scalar_unary(chart, extra);
            } else if (accept_punct("/")) {
                Expr rhs = scalar_unary(chart, extra);
                if (e.is_rational() && e.node().value.is_integer() && rhs.is_rational() &&
                    rhs.node().value.is_integer()) {
                    if (rhs.node().value.is_zero()) fail("division by zero in rational literal", peek());
                    e = Expr::rational(e.node().value / rhs.node().value);
                } else {
                    e = e / rhs;
                }
            } else {
                return e;
            }
        }
    }

    Expr scalar_unary(const ChartPtr& chart, const std::set<std::string>& extra) {
        if (accept_punct("-")) {
            Expr e = scalar_unary(chart, extra);
            if (e.is_rational()) return Expr::rational(-e.node().value);
            return -e;
        }
        return scalar_power(chart, extra);
    }

    Expr scalar_power(const ChartPtr& chart, const std::set<std::string>& extra) {
        Expr base = scalar_primary(chart, extra);
        if (accept_punct("^")) {
            bool neg = accept_punct("-");
            if (peek().kind != Tok::Int) fail("expected integer exponent after '^'", peek());
            std::int64_t v = next().value;
            if (v > 64) fail("exponent too large", peek());
            return pow(base, int(neg ? -v : v));
        }
        return base;
    }

    Expr scalar_primary(const ChartPtr& chart, const std::set<std::string>& extra) {
        const Token& t = peek();
        if (t.kind == Tok::Int) return Expr::integer(next().value);
        if (accept_punct("(")) {
            Expr e = scalar_sum(chart, extra);
            expect_punct(")");
            return e;
        }
        if (t.kind == Tok::Ident) {
            std::string id = next().text;
            if (id == "sin" || id == "cos" || id == "exp") {
                expect_punct("(");
                Expr arg = scalar_sum(chart, extra);
                expect_punct(")");
                return id == "sin" ? sin(arg) : id == "cos" ? cos(arg) : exp(arg);
            }
            if (chart->index_of(id) >= 0 || extra.count(id)) return Expr::coord(id);
            fail("unknown identifier '" + id + "'", t);
        }
        fail("expected expression", t);
    }

    // -- basis-combination expressions ---------------------------------------
    // Sum of terms; each term is a '*'/'/' chain of scalar factors containing
    // exactly one basis symbol. `vector_slash_basis` selects d/dc (vector
    // fields); otherwise the basis is the single token dc (one-forms, and
    // endomorphism images where dc denotes the coordinate field).

    std::vector<Expr> basis_combination(const ChartPtr& chart, bool vector_slash_basis) {
        std::vector<Expr> comps(chart->dim(), Expr::zero());
        // a bare 0 is the zero section
        if (peek().kind == Tok::Int && peek().value == 0) {
            const Token& after = peek(1);
            if (after.kind == Tok::Newline || after.kind == Tok::End ||
                (after.kind == Tok::Punct && (after.text == ";" || after.text == "}"))) {
                next();
                return comps;
            }
        }
        bool negative = accept_punct("-");
        while (true) {
            auto [idx, coeff] = basis_term(chart, vector_slash_basis);
            Expr signed_coeff = negative ? -coeff : coeff;
            if (coeff.is_rational() && negative) signed_coeff = Expr::rational(-coeff.node().value);
            comps[idx] = comps[idx].is_zero_constant() ? signed_coeff : comps[idx] + signed_coeff;
            if (accept_punct("+")) negative = false;
            else if (accept_punct("-")) negative = true;
            else break;
        }
        return comps;
    }

    int try_basis(const ChartPtr& chart, bool vector_slash_basis) {
        // Returns the coordinate index if the upcoming tokens form a basis
        // symbol, without consuming on failure.
        const Token& t = peek();
        if (t.kind != Tok::Ident) return -1;
        if (vector_slash_basis) {
            if (t.text != "d") return -1;
            const Token& slash = peek(1);
            const Token& dc = peek(2);
            if (slash.kind != Tok::Punct || slash.text != "/") return -1;
            if (dc.kind != Tok::Ident || dc.text.size() < 2 || dc.text[0] != 'd') return -1;
            int idx = chart->index_of(dc.text.substr(1));
            if (idx < 0) return -1;
            pos += 3;
            return idx;
        }
        if (t.text.size() < 2 || t.text[0] != 'd') return -1;
        int idx = chart->index_of(t.text.substr(1));
        if (idx < 0) return -1;
        ++pos;
        return idx;
    }

    std::pair<int, Expr> basis_term(const ChartPtr& chart, bool vector_slash_basis) {
        Expr coeff = Expr::one();
        bool have_coeff = false;
        int basis_idx = -1;
        const Token& start = peek();
        while (true) {
            int idx = try_basis(chart, vector_slash_basis);
            if (idx >= 0) {
                if (basis_idx >= 0) fail("more than one basis symbol in a term", peek());
                basis_idx = idx;
            } else {
                Expr f = scalar_power(chart, {});
                coeff = have_coeff ? coeff * f : f;
                have_coeff = true;
            }
            if (accept_punct("*")) continue;
            if (peek().kind == Tok::Punct && peek().text == "/") {
                // Allowed only between scalar factors (x/2 * dz).
                const Token& slash = peek();
                ++pos;
                int idx2 = try_basis(chart, vector_slash_basis);
                if (idx2 >= 0) fail("cannot divide by a basis symbol", slash);
                Expr f = scalar_power(chart, {});
                coeff = have_coeff ? coeff / f : Expr::one() / f;
                have_coeff = true;
                continue;
            }
            break;
        }
        if (basis_idx < 0) fail("term is missing a basis symbol", start);
        return {basis_idx, coeff};
    }

    // -- statements ----------------------------------------------------------

    void parse_manifold() {
        const Token& at = peek();
        std::string name = expect_ident("chart name");
        declare(name, at);
        expect_keyword("coords");
        std::vector<std::string> coords;
        while (peek().kind == Tok::Ident) coords.push_back(next().text);
        if (coords.empty()) fail("chart needs at least one coordinate", peek());
        try {
            s.charts.emplace(name, make_chart(name, coords));
        } catch (const Error& e) {
            fail(e.what(), at);
        }
        expect_statement_end();
    }

    void parse_vectorfield() {
        const Token& at = peek();
        std::string name = expect_ident("vector field name");
        declare(name, at);
        expect_keyword("on");
        ChartPtr chart = chart_ref(expect_ident("chart name"), peek());
        expect_punct("=");
        auto comps = basis_combination(chart, true);
        s.vector_fields.emplace(name, VectorField::make(chart, comps).simplified());
        expect_statement_end();
    }

    void parse_oneform() {
        const Token& at = peek();
        std::string name = expect_ident("one-form name");
        declare(name, at);
        expect_keyword("on");
        ChartPtr chart = chart_ref(expect_ident("chart name"), peek());
        expect_punct("=");
        auto comps = basis_combination(chart, false);
        s.one_forms.emplace(name, OneForm::make(chart, comps).simplified());
        expect_statement_end();
    }

    // twoform/bivector/metric entry blocks: { (ci,cj) = expr; ... }
    ExprMatrix entry_block(const ChartPtr& chart, bool antisym) {
        expect_punct("{");
        int n = chart->dim();
        ExprMatrix m(n, n);
        std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
        skip_newlines();
        while (!accept_punct("}")) {
            const Token& at = peek();
            expect_punct("(");
            std::string ci = expect_ident("coordinate");
            expect_punct(",");
            std::string cj = expect_ident("coordinate");
            expect_punct(")");
            int i = chart->index_of(ci), j = chart->index_of(cj);
            if (i < 0 || j < 0) fail("unknown coordinate in entry", at);
            expect_punct("=");
            Expr e = expr_simplify(scalar_sum(chart));
            if (antisym && i == j && !e.is_zero_constant())
                fail("diagonal entry of an antisymmetric tensor must be 0", at);
            Expr mirror = antisym ? expr_simplify(-e) : e;
            if (given[i][j] && !is_symbolically_zero(m.at(i, j) - e))
                fail("conflicting value for entry (" + ci + "," + cj + ")", at);
            if (given[j][i] && i != j && !is_symbolically_zero(m.at(j, i) - mirror))
                fail("conflicting value for entry (" + cj + "," + ci + ")", at);
            m.at(i, j) = e;
            given[i][j] = true;
            if (i != j) {
                m.at(j, i) = mirror;
                given[j][i] = true;
            }
            skip_newlines();
            if (accept_punct(";")) skip_newlines();
        }
        return m;
    }

    void parse_twoform(bool bivector) {
        const Token& at = peek();
        std::string name = expect_ident("name");
        declare(name, at);
        expect_keyword("on");
        ChartPtr chart = chart_ref(expect_ident("chart name"), peek());
        ExprMatrix m = entry_block(chart, true);
        try {
            if (bivector) s.bivectors.emplace(name, Bivector::make(chart, m));
            else s.two_forms.emplace(name, TwoForm::make(chart, m));
        } catch (const Error& e) {
            fail(e.what(), at);
        }
        expect_statement_end();
    }

    void parse_metric() {
        const Token& at = peek();
        std::string name = expect_ident("metric name");
        declare(name, at);
        expect_keyword("on");
        ChartPtr chart = chart_ref(expect_ident("chart name"), peek());
        ExprMatrix m = entry_block(chart, false);
        try {
            s.metrics.emplace(name, Metric::make(chart, m));
        } catch (const Error& e) {
            fail(e.what(), at);
        }
        expect_statement_end();
    }

    void parse_endo() {
        const Token& at = peek();
        std::string name = expect_ident("endomorphism name");
        declare(name, at);
        expect_keyword("on");
        ChartPtr chart = chart_ref(expect_ident("chart name"), peek());
        expect_punct("{");
        int n = chart->dim();
        ExprMatrix m(n, n);
        std::vector<bool> given(n, false);
        skip_newlines();
        while (!accept_punct("}")) {
            const Token& col_at = peek();
            int j = try_basis(chart, false);
            if (j < 0) fail("expected a basis symbol d<coordinate>", col_at);
            if (given[j]) fail("duplicate image for d" + chart->coords[j], col_at);
            given[j] = true;
            if (peek().kind != Tok::Arrow) fail("expected '->'", peek());
            ++pos;
            auto comps = basis_combination(chart, false); // dc denotes the coordinate field here
            for (int i = 0; i < n; ++i) m.at(i, j) = comps[i];
            skip_newlines();
            if (accept_punct(";")) skip_newlines();
        }
        for (int j = 0; j < n; ++j)
            if (!given[j]) fail("missing image for d" + chart->coords[j], at);
        s.endos.emplace(name, Endo::make(chart, m));
        expect_statement_end();
    }

    void parse_structure() {
        expect_keyword("apc");
        const Token& at = peek();
        std::string name = expect_ident("structure name");
        declare(name, at);
        expect_punct("=");
        expect_punct("(");
        std::string phi = expect_ident("endomorphism name");
        expect_punct(",");
        std::string xi = expect_ident("vector field name");
        expect_punct(",");
        std::string eta = expect_ident("one-form name");
        std::optional<std::string> g;
        if (accept_punct(",")) g = expect_ident("metric name");
        expect_punct(")");
        if (!s.endos.count(phi)) fail("undeclared endomorphism '" + phi + "'", at);
        if (!s.vector_fields.count(xi)) fail("undeclared vector field '" + xi + "'", at);
        if (!s.one_forms.count(eta)) fail("undeclared one-form '" + eta + "'", at);
        if (g && !s.metrics.count(*g)) fail("undeclared metric '" + *g + "'", at);
        APC apc;
        apc.name = name;
        apc.phi = s.endos.at(phi);
        apc.xi = s.vector_fields.at(xi);
        apc.eta = s.one_forms.at(eta);
        if (g) apc.g = s.metrics.at(*g);
        try {
            require_same_chart(apc.phi.chart, apc.xi.chart, "structure");
            require_same_chart(apc.phi.chart, apc.eta.chart, "structure");
            if (apc.g) require_same_chart(apc.phi.chart, apc.g->chart, "structure");
        } catch (const Error& e) {
            fail(e.what(), at);
        }
        s.structures.emplace(name, std::move(apc));
        expect_statement_end();
    }

    void parse_map() {
        const Token& at = peek();
        std::string name = expect_ident("map name");
        declare(name, at);
        expect_punct(":");
        ChartPtr src = chart_ref(expect_ident("source chart"), peek());
        if (peek().kind != Tok::Arrow) fail("expected '->'", peek());
        ++pos;
        ChartPtr dst = chart_ref(expect_ident("target chart"), peek());
        expect_punct("{");
        skip_newlines();
        expect_keyword("forward");
        expect_punct(":");
        std::vector<Expr> fwd;
        fwd.push_back(scalar_sum(src));
        while (accept_punct(",")) fwd.push_back(scalar_sum(src));
        expect_punct(";");
        skip_newlines();
        expect_keyword("inverse");
        expect_punct(":");
        std::vector<Expr> inv;
        inv.push_back(scalar_sum(dst));
        while (accept_punct(",")) inv.push_back(scalar_sum(dst));
        skip_newlines();
        accept_punct(";");
        skip_newlines();
        expect_punct("}");
        try {
            s.maps.emplace(name, Diffeo::make(name, src, dst, fwd, inv));
        } catch (const Error& e) {
            fail(e.what(), at);
        }
        expect_statement_end();
    }

    void parse_check() {
        const Token& at = peek();
        std::string kindw = expect_ident("check kind");
        Directive d;
        d.line = at.line;
        auto need_struct = [&](const std::string& n) {
            if (!s.structures.count(n)) fail("undeclared structure '" + n + "'", at);
        };
        if (kindw == "apc" || kindw == "apcmetric" || kindw == "gapc" || kindw == "blocks" ||
            kindw == "equiv" || kindw == "products") {
            std::string n = expect_ident("structure name");
            need_struct(n);
            d.args = {n};
            d.kind = kindw == "apc"       ? Directive::Kind::Apc
                     : kindw == "apcmetric" ? Directive::Kind::ApcMetric
                     : kindw == "gapc"      ? Directive::Kind::Gapc
                     : kindw == "blocks"    ? Directive::Kind::Blocks
                     : kindw == "equiv"     ? Directive::Kind::Equiv
                                            : Directive::Kind::Products;
            d.text = "check " + kindw + " " + n;
        } else if (kindw == "normal") {
            std::string n = expect_ident("structure name");
            need_struct(n);
            d.kind = Directive::Kind::Normal;
            d.args = {n};
            d.text = "check normal " + n;
            if (peek().kind == Tok::Ident && peek().text == "via") {
                ++pos;
                std::string v = expect_ident("'classical', 'generalized' or 'both'");
                if (v != "classical" && v != "generalized" && v != "both")
                    fail("expected 'classical', 'generalized' or 'both'", at);
                d.via = v;
                d.text += " via " + v;
            }
        } else if (kindw == "compat") {
            std::string n = expect_ident("structure name");
            need_struct(n);
            expect_keyword("with");
            std::string g = expect_ident("metric name");
            if (!s.metrics.count(g)) fail("undeclared metric '" + g + "'", at);
            d.kind = Directive::Kind::Compat;
            d.args = {n, g};
            d.text = "check compat " + n + " with " + g;
        } else if (kindw == "btransform") {
            std::string n = expect_ident("structure name");
            need_struct(n);
            expect_keyword("with");
            std::string b = expect_ident("two-form name");
            if (!s.two_forms.count(b)) fail("undeclared two-form '" + b + "'", at);
            d.kind = Directive::Kind::BTransform;
            d.args = {n, b};
            d.text = "check btransform " + n + " with " + b;
        } else if (kindw == "betatransform") {
            std::string n = expect_ident("structure name");
            need_struct(n);
            expect_keyword("with");
            std::string b = expect_ident("bivector name");
            if (!s.bivectors.count(b)) fail("undeclared bivector '" + b + "'", at);
            d.kind = Directive::Kind::BetaTransform;
            d.args = {n, b};
            d.text = "check betatransform " + n + " with " + b;
        } else if (kindw == "morphism") {
            std::string f = expect_ident("map name");
            if (!s.maps.count(f)) fail("undeclared map '" + f + "'", at);
            expect_punct(":");
            std::string a = expect_ident("structure name");
            need_struct(a);
            if (peek().kind != Tok::Arrow) fail("expected '->'", peek());
            ++pos;
            std::string b = expect_ident("structure name");
            need_struct(b);
            d.kind = Directive::Kind::Morphism;
            d.args = {f, a, b};
            d.text = "check morphism " + f + " : " + a + " -> " + b;
        } else if (kindw == "family") {
            std::string a = expect_ident("structure name");
            need_struct(a);
            std::string b = expect_ident("structure name");
            need_struct(b);
            expect_keyword("param");
            std::string t = expect_ident("parameter name");
            d.kind = Directive::Kind::Family;
            d.args = {a, b, t};
            d.text = "check family " + a + " " + b + " param " + t;
        } else if (kindw == "genmetric") {
            std::string g = expect_ident("metric name");
            if (!s.metrics.count(g)) fail("undeclared metric '" + g + "'", at);
            d.kind = Directive::Kind::GenMetricCheck;
            d.args = {g};
            d.text = "check genmetric " + g;
        } else {
            fail("unknown check kind '" + kindw + "'", at);
        }
        s.directives.push_back(std::move(d));
        expect_statement_end();
    }

    Session parse() {
        skip_newlines();
        while (peek().kind != Tok::End) {
            const Token& t = peek();
            if (t.kind != Tok::Ident) fail("expected a statement keyword", t);
            std::string kw = next().text;
            if (kw == "manifold") parse_manifold();
            else if (kw == "vectorfield") parse_vectorfield();
            else if (kw == "oneform") parse_oneform();
            else if (kw == "twoform") parse_twoform(false);
            else if (kw == "bivector") parse_twoform(true);
            else if (kw == "metric") parse_metric();
            else if (kw == "endo") parse_endo();
            else if (kw == "structure") parse_structure();
            else if (kw == "map") parse_map();
            else if (kw == "check") parse_check();
            else fail("unknown statement '" + kw + "'", t);
            skip_newlines();
        }
        return std::move(s);
    }
};

} // namespace

Session parse_session(const std::string& text, const std::string& source_name) {
    SessionParser p(text);
    Session s = p.parse();
    s.source_name = source_name;
    return s;
}

// ---------------------------------------------------------------------------

namespace {

std::string comps_to_dsl(const std::vector<Expr>& comps, const ChartPtr& chart, bool vector_basis) {
    std::string out;
    for (size_t i = 0; i < comps.size(); ++i) {
        Expr e = expr_simplify(comps[i]);
        if (e.is_zero_constant()) continue;
        std::string basis = (vector_basis ? "d/d" : "d") + chart->coords[i];
        std::string term;
        if (e.same_tree_as(Expr::one())) term = basis;
        else term = "(" + e.str() + ")*" + basis;
        out += out.empty() ? term : " + " + term;
    }
    return out.empty() ? "0" : out;
}

std::string entries_to_dsl(const ExprMatrix& m, const ChartPtr& chart, bool antisym) {
    std::string out = "{ ";
    int n = chart->dim();
    for (int i = 0; i < n; ++i)
        for (int j = antisym ? i + 1 : i; j < n; ++j) {
            Expr e = expr_simplify(m.at(i, j));
            if (e.is_zero_constant()) continue;
            out += "(" + chart->coords[i] + "," + chart->coords[j] + ") = " + e.str() + "; ";
        }
    return out + "}";
}

} // namespace

static std::string endo_to_dsl(const std::string& name, const Endo& e) {
    std::string out = "endo " + name + " on " + e.chart->name + " { ";
    for (int j = 0; j < e.chart->dim(); ++j) {
        std::vector<Expr> col(e.chart->dim());
        for (int i = 0; i < e.chart->dim(); ++i) col[i] = e.comps.at(i, j);
        out += "d" + e.chart->coords[j] + " -> " + comps_to_dsl(col, e.chart, false) + "; ";
    }
    return out + "}\n";
}

std::string unparse_session(const Session& s) {
    std::string out;
    for (const auto& [name, chart] : s.charts) {
        out += "manifold " + name + " coords";
        for (const auto& c : chart->coords) out += " " + c;
        out += "\n";
    }
    for (const auto& [name, v] : s.vector_fields)
        out += "vectorfield " + name + " on " + v.chart->name + " = " +
               comps_to_dsl(v.comps, v.chart, true) + "\n";
    for (const auto& [name, f] : s.one_forms)
        out += "oneform " + name + " on " + f.chart->name + " = " +
               comps_to_dsl(f.comps, f.chart, false) + "\n";
    for (const auto& [name, t] : s.two_forms)
        out += "twoform " + name + " on " + t.chart->name + " " + entries_to_dsl(t.comps, t.chart, true) + "\n";
    for (const auto& [name, b] : s.bivectors)
        out += "bivector " + name + " on " + b.chart->name + " " + entries_to_dsl(b.comps, b.chart, true) + "\n";
    for (const auto& [name, g] : s.metrics)
        out += "metric " + name + " on " + g.chart->name + " " + entries_to_dsl(g.comps, g.chart, false) + "\n";
    for (const auto& [name, e] : s.endos) out += endo_to_dsl(name, e);

    // Structures hold copies of their components, so emit them under
    // synthesized names; re-parsing yields value-equal structures.
    for (const auto& [name, apc] : s.structures) {
        out += endo_to_dsl(name + "__phi", apc.phi);
        out += "vectorfield " + name + "__xi on " + apc.xi.chart->name + " = " +
               comps_to_dsl(apc.xi.comps, apc.xi.chart, true) + "\n";
        out += "oneform " + name + "__eta on " + apc.eta.chart->name + " = " +
               comps_to_dsl(apc.eta.comps, apc.eta.chart, false) + "\n";
        if (apc.g)
            out += "metric " + name + "__g on " + apc.g->chart->name + " " +
                   entries_to_dsl(apc.g->comps, apc.g->chart, false) + "\n";
        out += "structure apc " + name + " = (" + name + "__phi, " + name + "__xi, " + name +
               "__eta" + (apc.g ? ", " + name + "__g" : "") + ")\n";
    }
    for (const auto& [name, f] : s.maps) {
        out += "map " + name + " : " + f.source->name + " -> " + f.target->name + " { forward: ";
        for (size_t i = 0; i < f.forward.size(); ++i)
            out += (i ? ", " : "") + expr_simplify(f.forward[i]).str();
        out += "; inverse: ";
        for (size_t i = 0; i < f.inverse.size(); ++i)
            out += (i ? ", " : "") + expr_simplify(f.inverse[i]).str();
        out += " }\n";
    }
    for (const auto& d : s.directives) out += d.text + "\n";
    return out;
}

} // namespace paracalc
