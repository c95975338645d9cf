#include "totreal/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

#include "totreal/errors.hpp"

namespace totreal {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw ValidationError("IntegerMatrix: entry count does not match rows x cols");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ValidationError("IntegerMatrix: dimension mismatch in product");
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += x * rhs.at(k, j);
        }
    return out;
}

Int IntegerMatrix::determinant() const {
    if (rows_ != cols_) throw ValidationError("determinant: matrix not square");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntegerMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row a -= q * row b
void row_axpy(IntegerMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}
void col_axpy(IntegerMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}
void negate_row(IntegerMatrix& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithResult res{m, IntegerMatrix::identity(rows), IntegerMatrix::identity(cols)};
    IntegerMatrix& d = res.d;
    IntegerMatrix& u = res.u;
    IntegerMatrix& v = res.v;

    const std::size_t bound = std::min(rows, cols);
    for (std::size_t t = 0; t < bound; ++t) {
        // Pivot: smallest |entry| != 0 in the trailing block, (row, col) tie-break.
        bool found = false;
        std::size_t pr = t, pc = t;
        Int best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const Int& e = d.at(i, j);
                if (e == 0) continue;
                Int a = abs(e);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (!found) break;
        if (pr != t) {
            swap_rows(d, t, pr);
            swap_rows(u, t, pr);
        }
        if (pc != t) {
            swap_cols(d, t, pc);
            swap_cols(v, t, pc);
        }

        for (;;) {
            // Clear column t below the pivot.
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                row_axpy(d, i, t, q);
                row_axpy(u, i, t, q);
                if (d.at(i, t) != 0) {
                    // Remainder smaller than the pivot: promote it.
                    swap_rows(d, t, i);
                    swap_rows(u, t, i);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                col_axpy(d, j, t, q);
                col_axpy(v, j, t, q);
                if (d.at(t, j) != 0) {
                    swap_cols(d, t, j);
                    swap_cols(v, t, j);
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            // Pivot must divide every entry of the trailing block.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols && divides; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        // Fold row i into row t and restart the clearing loop.
                        row_axpy(d, t, i, Int(-1));
                        row_axpy(u, t, i, Int(-1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
    }
    return res;
}

Int PrimePower::value() const {
    Int v = 1;
    for (unsigned i = 0; i < exponent; ++i) v *= prime;
    return v;
}

std::vector<PrimePower> factor_prime_powers(Int n) {
    if (n <= 1) throw ValidationError("factor_prime_powers: argument must exceed 1");
    std::vector<PrimePower> out;
    Int p = 2;
    while (p * p <= n) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.push_back({p, e});
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) out.push_back({n, 1});
    std::sort(out.begin(), out.end());
    return out;
}

FGAbelianGroup::FGAbelianGroup(std::size_t rank, std::vector<PrimePower> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
    for (const auto& t : torsion_) {
        if (t.prime < 2 || t.exponent < 1)
            throw ValidationError("FGAbelianGroup: torsion entries must be prime powers > 1");
        auto f = factor_prime_powers(t.prime);
        if (f.size() != 1 || f[0].exponent != 1)
            throw ValidationError("FGAbelianGroup: " + t.prime.str() + " is not prime");
    }
    std::sort(torsion_.begin(), torsion_.end());
}

FGAbelianGroup FGAbelianGroup::cyclic(const Int& n) {
    if (n == 0) return FGAbelianGroup(1);
    Int a = abs(n);
    if (a == 1) return FGAbelianGroup(0);
    return FGAbelianGroup(0, factor_prime_powers(a));
}

bool FGAbelianGroup::has_2torsion() const {
    return std::any_of(torsion_.begin(), torsion_.end(),
                       [](const PrimePower& t) { return t.prime == 2; });
}

FGAbelianGroup FGAbelianGroup::direct_sum(const FGAbelianGroup& other) const {
    std::vector<PrimePower> t = torsion_;
    t.insert(t.end(), other.torsion_.begin(), other.torsion_.end());
    return FGAbelianGroup(rank_ + other.rank_, std::move(t));
}

std::pair<std::size_t, std::size_t> FGAbelianGroup::mod2_hom_ext_dims() const {
    std::size_t two = std::count_if(torsion_.begin(), torsion_.end(),
                                    [](const PrimePower& t) { return t.prime == 2; });
    return {rank_ + two, two};
}

std::vector<Int> FGAbelianGroup::invariant_factors() const {
    // Greedily peel the largest power of each prime into the last factor.
    std::map<Int, std::vector<Int>> by_prime;
    for (const auto& t : torsion_) by_prime[t.prime].push_back(t.value());
    std::size_t layers = 0;
    for (auto& [p, v] : by_prime) {
        std::sort(v.begin(), v.end(), std::greater<>());
        layers = std::max(layers, v.size());
    }
    std::vector<Int> factors(layers, 1);
    for (auto& [p, v] : by_prime)
        for (std::size_t i = 0; i < v.size(); ++i) factors[i] *= v[i];
    std::reverse(factors.begin(), factors.end());  // ascending, d1 | d2 | ...
    return factors;
}

std::string FGAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank_ > 0) {
        os << (rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_));
        first = false;
    }
    std::vector<Int> qs;
    for (const auto& t : torsion_) qs.push_back(t.value());
    std::sort(qs.begin(), qs.end());
    for (const auto& q : qs) {
        if (!first) os << " + ";
        os << "Z/" << q;
        first = false;
    }
    return os.str();
}

FGAbelianGroup FGAbelianGroup::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "0" || s.empty()) return FGAbelianGroup();
    std::size_t rank = 0;
    std::vector<PrimePower> torsion;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 'Z') throw ValidationError("group parse: expected 'Z' in '" + text + "'");
        ++pos;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw ValidationError("group parse: missing exponent");
            rank += std::stoul(s.substr(start, pos - start));
        } else if (pos < s.size() && s[pos] == '/') {
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw ValidationError("group parse: missing torsion order");
            Int q(s.substr(start, pos - start));
            if (q < 2) throw ValidationError("group parse: torsion order must exceed 1");
            auto f = factor_prime_powers(q);
            torsion.insert(torsion.end(), f.begin(), f.end());
        } else {
            rank += 1;
        }
        if (pos < s.size()) {
            if (s[pos] != '+') throw ValidationError("group parse: expected '+' in '" + text + "'");
            ++pos;
        }
    }
    return FGAbelianGroup(rank, std::move(torsion));
}

std::size_t GroupPresentation::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return i;
    throw ValidationError("presentation: undeclared generator '" + name + "'");
}

std::string GroupPresentation::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? "," : "") << generators[i];
    os << "|";
    for (std::size_t r = 0; r < relators.size(); ++r) {
        if (r) os << ",";
        for (const Letter& l : relators[r]) {
            std::string g = generators[l.generator];
            if (l.sign < 0)
                for (char& c : g) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            os << g;
        }
    }
    return os.str();
}

GroupPresentation parse_presentation(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto bar = s.find('|');
    if (bar == std::string::npos)
        throw ValidationError("presentation: missing '|' separator in '" + text + "'");
    GroupPresentation p;
    std::string gens = s.substr(0, bar);
    std::size_t pos = 0;
    while (pos < gens.size()) {
        auto comma = gens.find(',', pos);
        std::string name = gens.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (name.empty()) throw ValidationError("presentation: empty generator name");
        for (char c : name)
            if (!std::islower(static_cast<unsigned char>(c)))
                throw ValidationError("presentation: generator names must be lowercase, got '" + name + "'");
        p.generators.push_back(name);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    std::string rels = s.substr(bar + 1);
    pos = 0;
    while (pos < rels.size()) {
        auto comma = rels.find(',', pos);
        std::string wtext = rels.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        Word w;
        for (char c : wtext) {
            bool inv = std::isupper(static_cast<unsigned char>(c));
            std::string name(1, inv ? static_cast<char>(std::tolower(static_cast<unsigned char>(c))) : c);
            w.push_back({p.generator_index(name), inv ? -1 : +1});
        }
        if (!w.empty()) p.relators.push_back(std::move(w));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return p;
}

FGAbelianGroup abelianization(const GroupPresentation& p) {
    const std::size_t g = p.generators.size(), r = p.relators.size();
    IntegerMatrix m(r, g);
    for (std::size_t i = 0; i < r; ++i)
        for (const Letter& l : p.relators[i]) {
            if (l.generator >= g)
                throw ValidationError("presentation: relator letter index out of range");
            m.at(i, l.generator) += l.sign;
        }
    SmithResult snf = smith_normal_form(m);
    std::vector<PrimePower> torsion;
    std::size_t killed = 0;
    const std::size_t diag = std::min(r, g);
    for (std::size_t i = 0; i < diag; ++i) {
        const Int& d = snf.d.at(i, i);
        if (d == 0) break;
        ++killed;
        if (d > 1) {
            auto f = factor_prime_powers(d);
            torsion.insert(torsion.end(), f.begin(), f.end());
        }
    }
    return FGAbelianGroup(g - killed, std::move(torsion));
}

}  // namespace totreal
