#include "aluffi/pencil.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "aluffi/util.hpp"

namespace aluffi {

Block Block::nilpotent(int n) {
    if (n < 1) throw std::invalid_argument("nilpotent block needs parameter >= 1");
    return Block{Kind::Nilpotent, n, 0};
}

Block Block::jordan(int m, const Rational& eigenvalue) {
    if (m < 1) throw std::invalid_argument("jordan block needs length >= 1");
    return Block{Kind::Jordan, m, eigenvalue};
}

Block Block::scroll(int l) {
    if (l < 1) throw std::invalid_argument("scroll block needs length >= 1");
    return Block{Kind::Scroll, l, 0};
}

int Block::columns() const {
    switch (kind) {
        case Kind::Nilpotent:
            return length + 1;
        case Kind::Jordan:
        case Kind::Scroll:
            return length;
    }
    return 0;
}

int Block::variables() const {
    switch (kind) {
        case Kind::Nilpotent:
        case Kind::Jordan:
            return length;
        case Kind::Scroll:
            return length + 1;
    }
    return 0;
}

std::string Block::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Nilpotent:
            os << "N(" << length << ")";
            break;
        case Kind::Jordan:
            os << "J(" << length << ";" << eigenvalue.get_str() << ")";
            break;
        case Kind::Scroll:
            os << "S(" << length << ")";
            break;
    }
    return os.str();
}

int PencilSpec::columns() const {
    int c = 0;
    for (const Block& b : blocks) c += b.columns();
    return c;
}

int PencilSpec::variables() const {
    int c = 0;
    for (const Block& b : blocks) c += b.variables();
    return c;
}

std::string PencilSpec::str() const {
    std::string s;
    for (const Block& b : blocks) {
        if (!s.empty()) s += " ";
        s += b.str();
    }
    return s;
}

PencilSpec PencilSpec::parse(std::string_view text) {
    PencilSpec spec;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw std::invalid_argument("bad pencil spec at position " + std::to_string(pos) +
                                    ": " + msg + " in '" + std::string(text) + "'");
    };
    for (;;) {
        skip_ws();
        if (pos >= text.size()) break;
        char kind = text[pos++];
        skip_ws();
        if (pos >= text.size() || text[pos] != '(') fail("expected '('");
        ++pos;
        std::size_t close = text.find(')', pos);
        if (close == std::string_view::npos) fail("expected ')'");
        std::string inner(text.substr(pos, close - pos));
        pos = close + 1;
        std::size_t semi = inner.find(';');
        std::string len_s = semi == std::string::npos ? inner : inner.substr(0, semi);
        int len = 0;
        try {
            len = std::stoi(len_s);
        } catch (...) {
            fail("bad length '" + len_s + "'");
        }
        switch (kind) {
            case 'N':
            case 'n':
                if (semi != std::string::npos) fail("nilpotent block takes no eigenvalue");
                spec.blocks.push_back(Block::nilpotent(len));
                break;
            case 'S':
            case 's':
                if (semi != std::string::npos) fail("scroll block takes no eigenvalue");
                spec.blocks.push_back(Block::scroll(len));
                break;
            case 'J':
            case 'j': {
                if (semi == std::string::npos) fail("jordan block needs an eigenvalue");
                Rational ev = util::parse_rational(inner.substr(semi + 1));
                spec.blocks.push_back(Block::jordan(len, ev));
                break;
            }
            default:
                fail(std::string("unknown block kind '") + kind + "'");
        }
    }
    if (spec.blocks.empty())
        throw std::invalid_argument("empty pencil spec: '" + std::string(text) + "'");
    return spec;
}

SymbolicMatrix build_matrix(const PencilSpec& spec) {
    if (spec.blocks.empty()) throw std::invalid_argument("empty pencil spec");
    std::vector<std::string> names;
    int kn = 0, kj = 0, ks = 0;
    for (const Block& b : spec.blocks) {
        switch (b.kind) {
            case Block::Kind::Nilpotent: {
                ++kn;
                for (int j = 1; j <= b.length; ++j)
                    names.push_back("x" + std::to_string(kn) + "_" + std::to_string(j));
                break;
            }
            case Block::Kind::Jordan: {
                ++kj;
                for (int j = 1; j <= b.length; ++j)
                    names.push_back("y" + std::to_string(kj) + "_" + std::to_string(j));
                break;
            }
            case Block::Kind::Scroll: {
                ++ks;
                for (int j = 0; j <= b.length; ++j)
                    names.push_back("z" + std::to_string(ks) + "_" + std::to_string(j));
                break;
            }
        }
    }
    RingPtr ring = RingContext::make(std::move(names));
    SymbolicMatrix m = SymbolicMatrix::zero(ring, 2, spec.columns());

    int var = 0, col = 0;
    auto v = [&](int offset) { return Polynomial::variable(ring, var + offset); };
    for (const Block& b : spec.blocks) {
        switch (b.kind) {
            case Block::Kind::Nilpotent: {
                int n = b.length;
                for (int c = 0; c <= n; ++c) {
                    if (c < n) m.at(0, col + c) = v(c);
                    if (c > 0) m.at(1, col + c) = v(c - 1);
                }
                break;
            }
            case Block::Kind::Jordan: {
                int len = b.length;
                Polynomial lambda = Polynomial::constant(ring, b.eigenvalue);
                for (int c = 0; c < len; ++c) {
                    m.at(0, col + c) = v(c);
                    Polynomial second = lambda * v(c);
                    if (c > 0) second = second + v(c - 1);
                    m.at(1, col + c) = second;
                }
                break;
            }
            case Block::Kind::Scroll: {
                int len = b.length;
                for (int c = 0; c < len; ++c) {
                    m.at(0, col + c) = v(c + 1);
                    m.at(1, col + c) = v(c);
                }
                break;
            }
        }
        var += b.variables();
        col += b.columns();
    }
    return m;
}

Ideal two_minor_ideal(const SymbolicMatrix& m) {
    if (m.rows != 2) throw std::invalid_argument("two_minor_ideal needs a 2-row matrix");
    if (m.cols < 2) return zero_ideal(m.ring);
    std::vector<Polynomial> mins = minors(m, 2);
    for (Polynomial& p : mins)
        if (!p.is_zero() && p.leading_term().coeff < 0) p = -p;
    std::sort(mins.begin(), mins.end(), poly_canonical_less);
    mins.erase(std::unique(mins.begin(), mins.end()), mins.end());
    return Ideal(m.ring, std::move(mins));
}

int predicted_height(const PencilSpec& spec) {
    if (spec.blocks.empty()) throw std::invalid_argument("empty pencil spec");
    int sum_n = 0, sum_m = 0, sum_l = 0, jordans = 0, scrolls = 0;
    std::map<std::string, int> by_eigenvalue;
    int gamma = 0;
    for (const Block& b : spec.blocks) {
        switch (b.kind) {
            case Block::Kind::Nilpotent:
                sum_n += b.length;
                break;
            case Block::Kind::Jordan: {
                ++jordans;
                sum_m += b.length;
                int c = ++by_eigenvalue[b.eigenvalue.get_str()];
                gamma = std::max(gamma, c);
                break;
            }
            case Block::Kind::Scroll:
                ++scrolls;
                sum_l += b.length;
                break;
        }
    }
    if (jordans > 0) return sum_n + sum_l + sum_m - gamma;
    if (scrolls > 0) return sum_n + sum_l - 1;
    return sum_n;
}

bool predicted_atf(const PencilSpec& spec) {
    if (predicted_height(spec) <= 1)
        throw std::domain_error("block criterion needs height > 1");
    bool any_jordan = false, any_scroll = false;
    std::map<std::string, int> class_size;
    for (const Block& b : spec.blocks) {
        if (b.kind == Block::Kind::Jordan) {
            any_jordan = true;
            ++class_size[b.eigenvalue.get_str()];
        }
        if (b.kind == Block::Kind::Scroll) any_scroll = true;
    }
    if (!any_jordan) return true;
    if (any_scroll) return false;
    int gamma = 0;
    for (const auto& [ev, count] : class_size) gamma = std::max(gamma, count);
    // The torsion obstruction needs a Jordan block of length > 1 inside an
    // eigenvalue class of maximal size: only then does its last variable meet
    // just r-1 of the quadric generators. Long blocks in smaller classes
    // leave I_r(Theta) = m^r intact.
    for (const Block& b : spec.blocks)
        if (b.kind == Block::Kind::Jordan && b.length > 1 &&
            class_size[b.eigenvalue.get_str()] == gamma)
            return false;
    return true;
}

Theorem24Record verify_theorem24(const PencilSpec& spec, int max_t) {
    SymbolicMatrix m = build_matrix(spec);
    Ideal j = two_minor_ideal(m);
    Theorem24Record rec;
    rec.r = codimension(j);
    if (rec.r <= 1) throw std::domain_error("theorem check needs height > 1");

    SymbolicMatrix theta = jacobian_matrix(j.generators());
    std::vector<Polynomial> mins = minors(theta, rec.r);
    for (Polynomial& p : mins) p = p.monic();
    std::vector<Polynomial> min_gens = minimalize_generators(std::move(mins));
    Ideal r_minors(j.ring(), min_gens);
    rec.a = equals_m_power(r_minors, rec.r);

    std::vector<Polynomial> igens = j.generators();
    igens.insert(igens.end(), min_gens.begin(), min_gens.end());
    Ideal i(j.ring(), minimalize_generators(std::move(igens)));

    rec.c_verdict = aluffi_torsion_free(j, i, max_t, /*certify=*/false);
    rec.c = rec.c_verdict.status != TorsionStatus::NotTorsionFree;
    rec.b = predicted_atf(spec);
    rec.consistent = (rec.a == rec.b) && (rec.b == rec.c);
    return rec;
}

SymbolicMatrix build_generalized_hankel(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("empty Hankel block list");
    int n = sizes.front();
    for (int s : sizes) {
        if (s < 2) throw std::invalid_argument("Hankel blocks need size >= 2");
        if (s != n)
            throw std::invalid_argument("Hankel blocks must share one row count");
    }
    std::vector<std::string> names;
    int blocks = static_cast<int>(sizes.size());
    for (int b = 1; b <= blocks; ++b)
        for (int j = 1; j <= 2 * n - 1; ++j)
            names.push_back(blocks == 1 ? "x" + std::to_string(j)
                                        : "x" + std::to_string(b) + "_" + std::to_string(j));
    RingPtr ring = RingContext::make(std::move(names));
    SymbolicMatrix m = SymbolicMatrix::zero(ring, n, n * blocks);
    for (int b = 0; b < blocks; ++b) {
        int base = b * (2 * n - 1);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                m.at(r, b * n + c) = Polynomial::variable(ring, base + r + c);
    }
    return m;
}

std::vector<int> row_variables(const SymbolicMatrix& m, int row) {
    std::vector<int> out;
    int n = m.ring->num_vars();
    std::vector<bool> seen(n, false);
    for (int c = 0; c < m.cols; ++c)
        for (const Term& t : m.at(row, c).terms())
            for (int v = 0; v < n; ++v)
                if (t.mono[v] > 0) seen[v] = true;
    for (int v = 0; v < n; ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

bool check_colon_lemma(const PencilSpec& spec) {
    int best_block = -1, best_len = 0, var_offset = 0, best_offset = -1;
    for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
        const Block& blk = spec.blocks[b];
        if (blk.kind == Block::Kind::Jordan && blk.eigenvalue == 0) {
            if (best_block < 0 || blk.length < best_len) {
                best_block = static_cast<int>(b);
                best_len = blk.length;
                best_offset = var_offset;
            }
        }
        var_offset += blk.variables();
    }
    if (best_block < 0)
        throw std::domain_error("colon lemma needs a zero-eigenvalue Jordan block");

    SymbolicMatrix m = build_matrix(spec);
    Ideal j2 = two_minor_ideal(m);
    Polynomial y1 = Polynomial::variable(m.ring, best_offset);
    Ideal quotient = colon(j2, y1);

    std::vector<Polynomial> vars;
    for (int v : row_variables(m, 1)) vars.push_back(Polynomial::variable(m.ring, v));
    Ideal second_row(m.ring, std::move(vars));
    return quotient.equals(second_row);
}

std::vector<PencilSpec> enumerate_specs(int max_columns,
                                        const std::vector<Rational>& eigenvalues) {
    std::vector<Block> items;
    for (int n = 1; n + 1 <= max_columns; ++n) items.push_back(Block::nilpotent(n));
    for (int l = 1; l <= max_columns; ++l) items.push_back(Block::scroll(l));
    for (int m = 1; m <= max_columns; ++m)
        for (const Rational& ev : eigenvalues) items.push_back(Block::jordan(m, ev));

    std::vector<PencilSpec> out;
    std::vector<Block> cur;
    auto rec = [&](auto&& self, std::size_t from, int cols_left) -> void {
        if (!cur.empty()) out.push_back(PencilSpec{cur});
        for (std::size_t i = from; i < items.size(); ++i) {
            int c = items[i].columns();
            if (c > cols_left) continue;
            cur.push_back(items[i]);
            self(self, i, cols_left - c);
            cur.pop_back();
        }
    };
    rec(rec, 0, max_columns);
    return out;
}

}  // namespace aluffi
