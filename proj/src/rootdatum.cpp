#include "siegel/rootdatum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace siegel {

namespace {

std::string lattice_string(const std::vector<Int>& coeffs, const char* basis) {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        Int c = coeffs[j];
        if (first) {
            if (c == -1) os << "-";
            else if (c != 1) os << c << "*";
        } else {
            os << (c > 0 ? " + " : " - ");
            if (c != 1 && c != -1) os << (c > 0 ? c : -c) << "*";
        }
        os << basis << (j + 1);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

std::string Character::to_string() const { return lattice_string(coeffs, "e"); }
std::string Cocharacter::to_string() const { return lattice_string(coeffs, "f"); }

namespace {

template <typename V>
V vec_combine(const V& x, const V& y, Int sy) {
    check(x.g == y.g, "DegreeMismatch", "lattice vectors of different degree");
    V r = x;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += sy * y.coeffs[i];
    return r;
}

}  // namespace

Character char_add(const Character& x, const Character& y) { return vec_combine(x, y, 1); }
Character char_sub(const Character& x, const Character& y) { return vec_combine(x, y, -1); }
Cocharacter cochar_add(const Cocharacter& x, const Cocharacter& y) { return vec_combine(x, y, 1); }
Cocharacter cochar_sub(const Cocharacter& x, const Cocharacter& y) { return vec_combine(x, y, -1); }

Cocharacter cochar_scale(Int n, const Cocharacter& x) {
    Cocharacter r = x;
    for (auto& c : r.coeffs) c *= n;
    return r;
}

Int pairing(const Character& x, const Cocharacter& y) {
    check(x.g == y.g, "DegreeMismatch", "pairing needs equal degree");
    Int s = 0;
    for (size_t i = 0; i < x.coeffs.size(); ++i) s += x.coeffs[i] * y.coeffs[i];
    return s;
}

namespace {

Character basis_char(Int g, Int j) {  // e_j, 1-based
    std::vector<Int> c(g + 1, 0);
    c[j - 1] = 1;
    return Character(g, std::move(c));
}

Cocharacter basis_cochar(Int g, Int j) {  // f_j, 1-based
    std::vector<Int> c(g + 1, 0);
    c[j - 1] = 1;
    return Cocharacter(g, std::move(c));
}

// s_j on X and X^vee, from the simple root / coroot pair.
Character reflect(const Character& x, const Character& alpha, const Cocharacter& alpha_vee) {
    return char_sub(x, [&] {
        Character scaled = alpha;
        Int c = pairing(x, alpha_vee);
        for (auto& v : scaled.coeffs) v *= c;
        return scaled;
    }());
}

Cocharacter reflect(const Cocharacter& y, const Character& alpha, const Cocharacter& alpha_vee) {
    Cocharacter scaled = alpha_vee;
    Int c = pairing(alpha, y);
    for (auto& v : scaled.coeffs) v *= c;
    return cochar_sub(y, scaled);
}

}  // namespace

RootDatum build_root_datum(Int g) {
    check(g >= 1, "BadDegree", "degree must be >= 1");
    RootDatum rd;
    rd.g = g;
    for (Int j = 1; j < g; ++j) {
        rd.simple_roots.push_back(char_sub(basis_char(g, j), basis_char(g, j + 1)));
        rd.simple_coroots.push_back(cochar_sub(basis_cochar(g, j), basis_cochar(g, j + 1)));
    }
    // alpha_g = 2 e_g - e_{g+1}, alpha_g^vee = f_g
    {
        Character last = basis_char(g, g);
        for (auto& c : last.coeffs) c *= 2;
        last = char_sub(last, basis_char(g, g + 1));
        rd.simple_roots.push_back(last);
        rd.simple_coroots.push_back(basis_cochar(g, g));
    }

    // Weyl closure of the simple pairs, then keep the roots in the
    // nonnegative integer span of the simple roots.
    std::vector<std::pair<Character, Cocharacter>> orbit;
    auto contains = [&](const Character& x) {
        return std::any_of(orbit.begin(), orbit.end(),
                           [&](const auto& p) { return p.first == x; });
    };
    for (Int j = 0; j < g; ++j) orbit.emplace_back(rd.simple_roots[j], rd.simple_coroots[j]);
    for (size_t head = 0; head < orbit.size(); ++head) {
        for (Int j = 0; j < g; ++j) {
            auto cur = orbit[head];  // copy: orbit may reallocate
            Character rx = reflect(cur.first, rd.simple_roots[j], rd.simple_coroots[j]);
            Cocharacter ry = reflect(cur.second, rd.simple_roots[j], rd.simple_coroots[j]);
            if (!contains(rx)) orbit.emplace_back(rx, ry);
        }
    }

    // Express a root in the simple-root basis; positive iff all coords >= 0.
    // The simple roots are linearly independent, so solve by elimination.
    auto positive_test = [&](const Character& x) {
        QMat sys(g + 1, g + 1);
        for (Int j = 0; j < g; ++j)
            for (Int i = 0; i <= g; ++i) sys(i, j) = Rational(rd.simple_roots[j].coeffs[i]);
        for (Int i = 0; i <= g; ++i) sys(i, g) = Rational(x.coeffs[i]);
        // reduce; consistent iff last column stays in the span
        int rank = 0;
        for (int col = 0; col < g && rank <= g; ++col) {
            int pivot = -1;
            for (int i = rank; i <= g; ++i)
                if (sys(i, col) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) continue;
            for (int j = 0; j <= g; ++j) std::swap(sys(pivot, j), sys(rank, j));
            Rational inv = Rational(1) / sys(rank, col);
            for (int j = 0; j <= g; ++j) sys(rank, j) *= inv;
            for (int i = 0; i <= g; ++i) {
                if (i == rank || sys(i, col) == 0) continue;
                Rational f = sys(i, col);
                for (int j = 0; j <= g; ++j) sys(i, j) -= f * sys(rank, j);
            }
            ++rank;
        }
        for (int i = rank; i <= g; ++i)
            if (sys(i, g) != 0) return false;  // not in the span
        for (int i = 0; i < rank; ++i) {
            if (denominator(sys(i, g)) != 1) return false;
            if (sys(i, g) < 0) return false;
        }
        return true;
    };

    for (const auto& [root, coroot] : orbit) {
        if (positive_test(root)) {
            rd.positive_roots.push_back(root);
            rd.positive_coroots.push_back(coroot);
        }
    }
    check(static_cast<Int>(rd.positive_roots.size()) == g * g, "InternalError",
          "positive root count is not g^2");

    rd.rho2 = Character(g, std::vector<Int>(g + 1, 0));
    rd.rho2_hat = Cocharacter(g, std::vector<Int>(g + 1, 0));
    for (const auto& r : rd.positive_roots) rd.rho2 = char_add(rd.rho2, r);
    for (const auto& c : rd.positive_coroots) rd.rho2_hat = cochar_add(rd.rho2_hat, c);
    return rd;
}

bool is_dominant(const Cocharacter& lam) {
    const Int g = lam.g;
    for (Int j = 0; j + 1 < g; ++j)
        if (lam.coeffs[j] < lam.coeffs[j + 1]) return false;
    return 2 * lam.coeffs[g - 1] >= lam.coeffs[g];
}

std::optional<std::vector<Int>> dominance_witness(const Cocharacter& lam, const Cocharacter& mu) {
    check(lam.g == mu.g, "DegreeMismatch", "dominance compare needs equal degree");
    check(is_dominant(lam) && is_dominant(mu), "NotDominant",
          "dominance compare needs dominant cocharacters");
    const Int g = lam.g;
    if (lam.coeffs[g] != mu.coeffs[g]) return std::nullopt;  // coroots have no f_{g+1} part
    std::vector<Int> witness(g);
    Int partial = 0;
    for (Int j = 0; j < g; ++j) {
        partial += lam.coeffs[j] - mu.coeffs[j];
        if (partial < 0) return std::nullopt;
        witness[j] = partial;
    }
    return witness;
}

Int eta_exponent(const Cocharacter& lam) { return lam.coeffs[lam.g]; }
Int det_exponent(const Cocharacter& lam) { return lam.g * eta_exponent(lam); }

QMat cochar_matrix(const Cocharacter& lam, Int ell, Int r) {
    check(is_prime(ell), "NotPrime", "torus evaluation needs a prime");
    const Int g = lam.g;
    QMat m(2 * static_cast<int>(g), 2 * static_cast<int>(g));
    for (Int i = 0; i < g; ++i) {
        m(i, i) = pow_rational(Rational(ell), r * lam.coeffs[i]);
        m(g + i, g + i) = pow_rational(Rational(ell), r * (lam.coeffs[g] - lam.coeffs[i]));
    }
    return m;
}

Rational similitude_factor(const QMat& m) {
    check(m.rows == m.cols && m.rows % 2 == 0, "ShapeMismatch",
          "similitude test needs a 2g x 2g matrix");
    const int g = m.rows / 2;
    QMat j(m.rows, m.rows);
    for (int i = 0; i < g; ++i) {
        j(i, g + i) = 1;
        j(g + i, i) = -1;
    }
    QMat mjmt = m * j * m.transpose();
    Rational c = mjmt(0, g);
    QMat cj = j;
    for (auto& e : cj.a) e *= c;
    check(mjmt == cj && c != 0, "NotSimilitude", "matrix is not a symplectic similitude");
    return c;
}

Cocharacter WeylElement::apply(const Cocharacter& y) const {
    const int n = on_cochar.rows;
    std::vector<Int> out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += on_cochar(i, j) * y.coeffs[j];
    return Cocharacter(y.g, std::move(out));
}

Character WeylElement::apply(const Character& x) const {
    const int n = on_char.rows;
    std::vector<Int> out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += on_char(i, j) * x.coeffs[j];
    return Character(x.g, std::move(out));
}

std::vector<WeylElement> weyl_group(const RootDatum& rd) {
    const Int g = rd.g;
    check(g <= 4, "SizeGuard", "Weyl group enumeration guarded to g <= 4");
    const int n = static_cast<int>(g) + 1;

    std::vector<WeylElement> gens;
    for (Int j = 0; j < g; ++j) {
        WeylElement w;
        w.on_cochar = IMat(n, n);
        w.on_char = IMat(n, n);
        for (int col = 0; col < n; ++col) {
            Cocharacter fy = reflect(basis_cochar(g, col + 1), rd.simple_roots[j],
                                     rd.simple_coroots[j]);
            Character ex = reflect(basis_char(g, col + 1), rd.simple_roots[j],
                                   rd.simple_coroots[j]);
            for (int row = 0; row < n; ++row) {
                w.on_cochar(row, col) = fy.coeffs[row];
                w.on_char(row, col) = ex.coeffs[row];
            }
        }
        w.sign = -1;
        gens.push_back(std::move(w));
    }

    std::map<std::vector<Int>, size_t> seen;
    std::vector<WeylElement> group;
    WeylElement id{IMat::identity(n), IMat::identity(n), 1};
    group.push_back(id);
    seen[id.on_cochar.a] = 0;
    for (size_t head = 0; head < group.size(); ++head) {
        for (const auto& s : gens) {
            WeylElement next;
            next.on_cochar = s.on_cochar * group[head].on_cochar;
            next.on_char = s.on_char * group[head].on_char;
            next.sign = s.sign * group[head].sign;
            if (seen.emplace(next.on_cochar.a, group.size()).second)
                group.push_back(std::move(next));
        }
    }
    Int expected = 1;
    for (Int i = 1; i <= g; ++i) expected *= 2 * i;  // 2^g g!
    check(static_cast<Int>(group.size()) == expected, "InternalError",
          "Weyl group closure has unexpected size");
    return group;
}

std::vector<Cocharacter> dominant_lower_set(const Cocharacter& lam) {
    check(is_dominant(lam), "NotDominant", "lower set of a non-dominant cocharacter");
    const Int g = lam.g;
    std::vector<Cocharacter> out;
    std::vector<Int> n(g, 0);
    // Bound each partial-sum coordinate using 2 mu_i >= lam_{g+1}.
    std::vector<Int> bound(g);
    Int acc = 0;
    for (Int j = 0; j < g; ++j) {
        acc += lam.coeffs[j];
        Int b2 = 2 * acc - (j + 1) * lam.coeffs[g];  // 2 * n_j <= b2
        bound[j] = b2 >= 0 ? b2 / 2 : -1;
    }
    std::vector<Int> stack(g, 0);
    auto emit = [&](auto&& self, Int depth) -> void {
        if (depth == g) {
            std::vector<Int> coeffs(g + 1);
            coeffs[g] = lam.coeffs[g];
            Int prev = 0;
            for (Int j = 0; j < g; ++j) {
                coeffs[j] = lam.coeffs[j] - stack[j] + prev;
                prev = stack[j];
            }
            Cocharacter mu(g, std::move(coeffs));
            if (is_dominant(mu)) out.push_back(std::move(mu));
            return;
        }
        for (Int v = 0; v <= bound[depth]; ++v) {
            stack[depth] = v;
            self(self, depth + 1);
        }
    };
    emit(emit, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Cocharacter dominant_representative(const Cocharacter& lam) {
    const Int g = lam.g;
    const Int r = lam.coeffs[g];
    std::vector<Int> coeffs(g + 1);
    coeffs[g] = r;
    for (Int i = 0; i < g; ++i) coeffs[i] = std::max(lam.coeffs[i], r - lam.coeffs[i]);
    std::sort(coeffs.begin(), coeffs.begin() + g, std::greater<Int>());
    return Cocharacter(g, std::move(coeffs));
}

}  // namespace siegel
