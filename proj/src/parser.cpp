#include "totreal/parser.hpp"

#include <cctype>
#include <optional>

#include "totreal/constructions.hpp"
#include "totreal/errors.hpp"

namespace totreal {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    ManifoldPtr parse() {
        auto [m, reversed] = parse_sum();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        (void)reversed;  // a reversed top-level expression has the same invariants
        return m;
    }

  private:
    // Items carry a pending orientation-reversal marker from rev(...); the
    // marker is consumed by the enclosing connected sum.
    using Item = std::pair<ManifoldPtr, bool>;

    Item parse_sum() {
        Item acc = parse_item();
        skip_ws();
        while (peek() == '#') {
            ++pos_;
            std::size_t col = column();
            Item rhs = parse_item();
            try {
                acc = {connected_sum(acc.first, rhs.first, rhs.second), false};
            } catch (const ValidationError& e) {
                fail_at(e.what(), col);
            }
            skip_ws();
        }
        return acc;
    }

    Item parse_item() {
        skip_ws();
        std::size_t save = pos_;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            long long n = parse_int();
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                std::size_t col = column();
                if (n < 1) fail_at("copy count must be at least 1", col);
                Item p = parse_prod();
                try {
                    return {connected_sum_copies(p.first, static_cast<int>(n)), p.second};
                } catch (const ValidationError& e) {
                    fail_at(e.what(), col);
                }
            }
            pos_ = save;  // bare integer: not this production
            fail("expected '*' after copy count");
        }
        return parse_prod();
    }

    Item parse_prod() {
        Item acc = parse_prim();
        skip_ws();
        // After a complete prim the only legal alnum continuation is the
        // product operator, so a bare 'x' here is always the operator.
        while (peek() == 'x') {
            ++pos_;
            std::size_t col = column();
            Item rhs = parse_prim();
            try {
                acc = {product(acc.first, rhs.first), false};
            } catch (const ValidationError& e) {
                fail_at(e.what(), col);
            }
            skip_ws();
        }
        return acc;
    }

    Item parse_prim() {
        skip_ws();
        std::size_t col = column();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Item inner = parse_sum();
            expect(')');
            return inner;
        }
        if (c == 'S' || c == 'T') {
            ++pos_;
            long long n = parse_int();
            try {
                return {c == 'S' ? sphere(static_cast<int>(n)) : torus(static_cast<int>(n)), false};
            } catch (const ValidationError& e) {
                fail_at(e.what(), col);
            }
        }
        if (try_keyword("surgery")) return parse_surgery(col);
        if (try_keyword("tbundle")) return parse_tbundle(col);
        if (try_keyword("rev")) {
            expect('(');
            Item inner = parse_sum();
            expect(')');
            return {inner.first, true};
        }
        if (try_keyword("s3tws2")) return {twisted_s3s2(), false};
        if (try_keyword("cp2cp2bar")) return {cp2_connsum_cp2bar(), false};
        if (try_keyword("wu")) return {wu_manifold(), false};
        if (try_keyword("xk")) {
            expect('(');
            long long k = parse_int();
            expect(')');
            try {
                return {x_block(static_cast<int>(k)), false};
            } catch (const ValidationError& e) {
                fail_at(e.what(), col);
            }
        }
        if (try_keyword("m")) {
            expect('(');
            long long p = parse_int();
            expect(',');
            long long k = parse_int();
            expect(')');
            try {
                return {m_block(static_cast<int>(p), static_cast<int>(k)), false};
            } catch (const ValidationError& e) {
                fail_at(e.what(), col);
            }
        }
        fail("expected an atom, '(' or a construction");
    }

    Item parse_surgery(std::size_t col) {
        expect('(');
        Item base = parse_sum();
        expect(',');
        long long p = parse_int();
        expect(',');
        bool canonical;
        if (try_keyword("canonical"))
            canonical = true;
        else if (try_keyword("other"))
            canonical = false;
        else
            fail("expected 'canonical' or 'other'");
        std::string label;
        skip_ws();
        if (peek() == ',') {
            ++pos_;
            label = parse_label();
        }
        expect(')');
        try {
            return {surgery(base.first, static_cast<int>(p), canonical, label), false};
        } catch (const ValidationError& e) {
            fail_at(e.what(), col);
        }
        return {};  // unreachable
    }

    Item parse_tbundle(std::size_t col) {
        expect('(');
        Item base = parse_sum();
        expect(',');
        long long k = parse_int();
        expect(')');
        try {
            return {torus_bundle_total(base.first, static_cast<int>(k)), false};
        } catch (const ValidationError& e) {
            fail_at(e.what(), col);
        }
        return {};  // unreachable
    }

    long long parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 9) fail_at("integer too large", start + 1);
        return std::stoll(text_.substr(start, pos_ - start));
    }

    std::string parse_label() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a label");
        return text_.substr(start, pos_ - start);
    }

    bool try_keyword(const std::string& kw) {
        skip_ws();
        if (text_.compare(pos_, kw.size(), kw) != 0) return false;
        // Keyword must not continue into a longer identifier.
        std::size_t after = pos_ + kw.size();
        if (after < text_.size() && std::isalnum(static_cast<unsigned char>(text_[after])))
            return false;
        pos_ += kw.size();
        return true;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char peek_at(std::size_t off) const {
        return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    std::size_t column() const { return pos_ + 1; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, column()); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t col) const {
        throw ParseError(msg, col);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

enum class Ctx { Sum, ProdLeft, ProdRight };

void print_node(const ManifoldPtr& d, Ctx ctx, std::string& out) {
    switch (d->node()) {
        case NodeKind::Atom:
            out += atom_name(d->atom());
            return;
        case NodeKind::ConnectedSum: {
            bool parens = ctx != Ctx::Sum;
            if (parens) out += "(";
            print_node(d->left(), Ctx::Sum, out);
            out += " # ";
            if (d->reverse_second()) {
                out += "rev(";
                print_node(d->right(), Ctx::Sum, out);
                out += ")";
            } else {
                // A right child that is itself a sum needs parens to survive
                // the left-associative reparse.
                Ctx rctx = d->right()->node() == NodeKind::ConnectedSum ? Ctx::ProdLeft : Ctx::Sum;
                print_node(d->right(), rctx, out);
            }
            if (parens) out += ")";
            return;
        }
        case NodeKind::Product: {
            bool parens = ctx == Ctx::ProdRight;
            if (parens) out += "(";
            print_node(d->left(), Ctx::ProdLeft, out);
            out += " x ";
            print_node(d->right(), Ctx::ProdRight, out);
            if (parens) out += ")";
            return;
        }
        case NodeKind::Surgery:
            out += "surgery(";
            print_node(d->left(), Ctx::Sum, out);
            out += ", " + std::to_string(d->surgery_p()) + ", ";
            out += d->canonical_framing() ? "canonical" : "other";
            if (!d->sphere_spec().empty()) out += ", " + d->sphere_spec();
            out += ")";
            return;
        case NodeKind::TorusBundleTotal:
            out += "tbundle(";
            print_node(d->left(), Ctx::Sum, out);
            out += ", " + std::to_string(d->torus_rank()) + ")";
            return;
    }
}

}  // namespace

ManifoldPtr parse_descriptor(const std::string& text) { return Parser(text).parse(); }

std::string print_descriptor(const ManifoldPtr& d) {
    std::string out;
    print_node(d, Ctx::Sum, out);
    return out;
}

}  // namespace totreal
