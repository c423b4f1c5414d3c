#include "uqrep/structure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace uqrep {

namespace {

long long round_int(Complex c, double tol, const char* what) {
    const long long v = std::llround(c.real());
    if (std::abs(c.imag()) > tol || std::abs(c.real() - static_cast<double>(v)) > tol)
        throw std::invalid_argument(std::string(what) + " is not an integer");
    return v;
}

std::string fmt_c(Complex c) {
    std::ostringstream os;
    const long long re = std::llround(c.real());
    if (std::abs(c.real() - static_cast<double>(re)) < 1e-9 && std::abs(c.imag()) < 1e-9) {
        os << re;
        return os.str();
    }
    os << c.real();
    if (c.imag() != 0.0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
    return os.str();
}

} // namespace

Weight LVector::m() const {
    Weight w(l.size());
    for (size_t j = 0; j < l.size(); ++j) w[j] = l[j] + static_cast<long long>(j) + 2;
    return w;
}

PrincipalParams LVector::params(double tol) const { return make_params(m(), c1, c2, tol); }

long long LVector::c1_int() const { return round_int(c1, 1e-9, "c1"); }
long long LVector::c2_int() const { return round_int(c2, 1e-9, "c2"); }

LVector LVector::permuted(int i, int k) const {
    const int N = n() + 1;
    if (i < 1 || i > N || k < 1 || k > N) throw std::out_of_range("LVector::permuted");
    std::vector<Complex> v(N);
    for (int j = 1; j <= N - 2; ++j) v[j - 1] = Complex(static_cast<double>(l[j - 1]), 0.0);
    v[N - 2] = c1;
    v[N - 1] = c2;
    std::swap(v[i - 1], v[k - 1]);
    LVector out;
    out.l.resize(N - 2);
    for (int j = 1; j <= N - 2; ++j)
        out.l[j - 1] = round_int(v[j - 1], 1e-9, "permuted l entry");
    for (int j = 1; j < N - 2; ++j)
        if (out.l[j - 1] <= out.l[j])
            throw std::invalid_argument("permuted L-vector is not strictly decreasing");
    out.c1 = v[N - 2];
    out.c2 = v[N - 1];
    return out;
}

std::string LVector::str() const {
    std::ostringstream os;
    os << "(l:";
    for (size_t j = 0; j < l.size(); ++j) os << (j ? "," : "") << l[j];
    os << "|c:" << fmt_c(c1) << "," << fmt_c(c2) << ")";
    return os.str();
}

bool LVector::operator==(const LVector& o) const {
    return l == o.l && std::abs(c1 - o.c1) < 1e-9 && std::abs(c2 - o.c2) < 1e-9;
}

LVector lvector_of(const PrincipalParams& p) {
    LVector L;
    L.l = l_params(p.m);
    L.c1 = p.c1;
    L.c2 = p.c2;
    return L;
}

const char* to_string(ParamCase c) {
    switch (c) {
        case ParamCase::IrreducibleGeneric: return "IrreducibleGeneric";
        case ParamCase::IrreducibleSpecial: return "IrreducibleSpecial";
        case ParamCase::Case1: return "Case1";
        case ParamCase::Case2: return "Case2";
        case ParamCase::Case3: return "Case3";
        case ParamCase::Case4: return "Case4";
        case ParamCase::SwappedCase1: return "SwappedCase1";
        case ParamCase::SwappedCase2: return "SwappedCase2";
        case ParamCase::SwappedCase3: return "SwappedCase3";
    }
    return "?";
}

namespace {

// Interval index r with l_{r-1} > c > l_r (l_0 = +inf, l_n = -inf);
// 0 when c equals some l_i (the special placement).
int interval_of(long long c, const std::vector<long long>& l) {
    for (size_t i = 0; i < l.size(); ++i) {
        if (c == l[i]) return 0;
        if (c > l[i]) return static_cast<int>(i) + 1;
    }
    return static_cast<int>(l.size()) + 1;
}

int l_index_of(long long c, const std::vector<long long>& l) {
    for (size_t i = 0; i < l.size(); ++i)
        if (c == l[i]) return static_cast<int>(i) + 1;
    return 0;
}

} // namespace

Classification classify(const PrincipalParams& p, const QValue& q, double tol) {
    Classification out;
    out.canonical = p;

    // Reduce Im c1 modulo pi/h into (-pi/2h, pi/2h]; c2 moves oppositely.
    const double per = M_PI / std::abs(q.log());
    double im = p.c1.imag();
    long long k = std::llround(im / per);
    im -= static_cast<double>(k) * per;
    if (im <= -per / 2 + tol) {
        im += per;
        k -= 1;
    }
    out.shift_k = static_cast<int>(k);
    out.canonical.c1 = Complex(p.c1.real(), im);
    out.canonical.c2 = Complex(p.c2.real(), p.c2.imag() + (p.c1.imag() - im));

    const auto l = l_params(p.m);
    const Complex c1 = out.canonical.c1, c2 = out.canonical.c2;
    const bool ints = std::abs(c1.imag()) <= tol &&
                      std::abs(c1.real() - std::round(c1.real())) <= tol &&
                      std::abs(c2.imag()) <= tol &&
                      std::abs(c2.real() - std::round(c2.real())) <= tol;
    if (!ints) {
        out.kind = ParamCase::IrreducibleGeneric;
        return out;
    }
    out.integral = true;
    out.c1i = std::llround(c1.real());
    out.c2i = std::llround(c2.real());

    const int i1 = interval_of(out.c1i, l), i2 = interval_of(out.c2i, l);
    if (i1 == 0 && i2 == 0) {
        out.kind = ParamCase::IrreducibleSpecial;
        out.r = l_index_of(out.c1i, l);
        out.s = l_index_of(out.c2i, l);
        return out;
    }
    if (i1 == 0) {
        out.kind = ParamCase::Case3;
        out.r = l_index_of(out.c1i, l);
        out.s = i2;
        return out;
    }
    if (i2 == 0) {
        out.kind = ParamCase::SwappedCase3;  // classify(c2, c1) is Case 3
        out.r = l_index_of(out.c2i, l);
        out.s = i1;
        return out;
    }
    if (i1 < i2) {
        out.kind = ParamCase::Case1;
        out.r = i1;
        out.s = i2;
        return out;
    }
    if (i1 > i2) {
        out.kind = ParamCase::SwappedCase1;
        out.r = i2;
        out.s = i1;
        return out;
    }
    out.r = out.s = i1;
    if (out.c1i > out.c2i) out.kind = ParamCase::Case2;
    else if (out.c1i < out.c2i) out.kind = ParamCase::SwappedCase2;
    else out.kind = ParamCase::Case4;
    return out;
}

std::string ConstituentLabel::name() const {
    std::ostringstream os;
    switch (kind) {
        case ConstituentKind::Full: os << "T"; break;
        case ConstituentKind::Rhat: os << "Rhat^{" << r << "," << s << "}"; break;
        case ConstituentKind::Rminus: os << "R-^{" << r << "," << s << "}"; break;
        case ConstituentKind::Rplus: os << "R+^{" << r << "," << s << "}"; break;
        case ConstituentKind::Rbreve: os << "Rbrv^{" << r << "," << s << "}"; break;
        case ConstituentKind::RtildeMinus: os << "Rt-^{" << r << "," << s << "}"; break;
        case ConstituentKind::RtildePlus: os << "Rt+^{" << r << "," << s << "}"; break;
        case ConstituentKind::RplusOne: os << "R+^{" << r << "}"; break;
        case ConstituentKind::RminusOne: os << "R-^{" << r << "}"; break;
        case ConstituentKind::FiniteDim: {
            os << "Tfin[";
            for (size_t i = 0; i < finite_hw.size(); ++i) os << (i ? "," : "") << finite_hw[i];
            os << "]";
            return os.str();
        }
    }
    os << L.str();
    return os.str();
}

bool ConstituentLabel::operator==(const ConstituentLabel& o) const {
    if (kind != o.kind || r != o.r || s != o.s) return false;
    if (kind == ConstituentKind::FiniteDim) return finite_hw == o.finite_hw;
    return L == o.L;
}

std::string Lattice::shape() const {
    std::ostringstream os;
    for (size_t li = 0; li < layers.size(); ++li) {
        if (li) os << " -> ";
        if (layers[li].size() > 1) {
            os << "{";
            for (size_t j = 0; j < layers[li].size(); ++j)
                os << (j ? " (+) " : "") << nodes[layers[li][j]].name();
            os << "}";
        } else {
            os << nodes[layers[li][0]].name();
        }
    }
    return os.str();
}

Weight finite_dim_weight(const LVector& L) {
    const int n = L.n();
    Weight hw(n + 1);
    hw[0] = L.c1_int() + 1;
    for (int i = 2; i <= n; ++i) hw[i - 1] = L.l[i - 2] + i;
    hw[n] = L.c2_int() + n + 1;
    validate_weight(hw);
    return hw;
}

namespace {

ConstituentLabel make_label(ConstituentKind kind, int r, int s, const LVector& L) {
    ConstituentLabel lab;
    lab.kind = kind;
    lab.r = r;
    lab.s = s;
    lab.L = L;
    if (kind == ConstituentKind::FiniteDim) lab.finite_hw = finite_dim_weight(L);
    return lab;
}

// The sub-end of the Case 1/2 chain in its equivalent printed form.
ConstituentLabel chain_tail(int r, int s, const LVector& L) {
    const int n = L.n();
    if (r == 1 && s == n) return make_label(ConstituentKind::FiniteDim, 0, 0, L);
    if (s < n)
        return make_label(ConstituentKind::Rminus, r, s + 1, L.permuted(s, n + 1));
    return make_label(ConstituentKind::Rplus, r - 1, s, L.permuted(r - 1, n));
}

Lattice chain_lattice(std::vector<ConstituentLabel> head_to_sub,
                      std::vector<std::vector<int>> layers) {
    Lattice lat;
    lat.nodes = std::move(head_to_sub);
    lat.layers = std::move(layers);
    for (size_t li = 0; li + 1 < lat.layers.size(); ++li)
        for (int a : lat.layers[li])
            for (int b : lat.layers[li + 1]) lat.arrows.emplace_back(a, b);
    return lat;
}

} // namespace

Lattice decompose(const PrincipalParams& p, const QValue& q, double tol) {
    const Classification cls = classify(p, q, tol);
    const int n = p.n();

    const bool swapped = cls.kind == ParamCase::SwappedCase1 ||
                         cls.kind == ParamCase::SwappedCase2 ||
                         cls.kind == ParamCase::SwappedCase3;
    if (cls.kind == ParamCase::IrreducibleGeneric || cls.kind == ParamCase::IrreducibleSpecial)
        throw std::invalid_argument("decompose: parameters give an irreducible representation");

    // Swapped parameters: build the diagram of (c2, c1) and reverse arrows.
    LVector L = lvector_of(cls.canonical);
    L.c1 = Complex(static_cast<double>(cls.c1i), 0.0);
    L.c2 = Complex(static_cast<double>(cls.c2i), 0.0);
    if (swapped) std::swap(L.c1, L.c2);

    Lattice lat;
    const int r = cls.r, s = cls.s;
    switch (swapped ? (cls.kind == ParamCase::SwappedCase1
                           ? ParamCase::Case1
                           : cls.kind == ParamCase::SwappedCase2 ? ParamCase::Case2
                                                                 : ParamCase::Case3)
                    : cls.kind) {
        case ParamCase::Case1: {
            auto head = make_label(ConstituentKind::Rminus, r + 1, s, L.permuted(r, n));
            auto mid1 = make_label(ConstituentKind::Rminus, r, s, L);
            auto mid2 = make_label(ConstituentKind::Rplus, r, s, L);
            auto tail = chain_tail(r, s, L);
            lat = chain_lattice({head, mid1, mid2, tail}, {{0}, {1, 2}, {3}});
            break;
        }
        case ParamCase::Case2: {
            auto mid1 = make_label(ConstituentKind::Rminus, r, r, L);
            auto mid2 = make_label(ConstituentKind::Rplus, r, r, L);
            ConstituentLabel tail;
            if (r < n)
                tail = make_label(ConstituentKind::Rminus, r, r + 1, L.permuted(r, n + 1));
            else if (r > 1)
                tail = make_label(ConstituentKind::Rplus, r - 1, r, L.permuted(r - 1, n));
            else  // n = 1: the sub is the finite-dimensional constituent
                tail = make_label(ConstituentKind::FiniteDim, 0, 0, L);
            lat = chain_lattice({mid1, mid2, tail}, {{0, 1}, {2}});
            break;
        }
        case ParamCase::Case3: {
            auto head = make_label(ConstituentKind::RtildeMinus, r, s, L);
            auto tail = make_label(ConstituentKind::RtildePlus, r, s, L);
            lat = chain_lattice({head, tail}, {{0}, {1}});
            break;
        }
        case ParamCase::Case4: {
            auto a = make_label(ConstituentKind::RplusOne, r, 0, L);
            auto b = make_label(ConstituentKind::RminusOne, r, 0, L);
            lat = chain_lattice({a, b}, {{0, 1}});
            break;
        }
        default:
            throw std::logic_error("decompose: unreachable");
    }

    if (swapped) {
        std::reverse(lat.layers.begin(), lat.layers.end());
        for (auto& [a, b] : lat.arrows) std::swap(a, b);
    }
    return lat;
}

std::vector<Weight> constituent_weights(const ConstituentLabel& lab, const Window& win) {
    if (lab.kind == ConstituentKind::FiniteDim) {
        // Carrier = the branching weights of the identified highest weight.
        auto weights = branching(lab.finite_hw);
        std::sort(weights.begin(), weights.end());
        return weights;
    }

    const auto all = principal_weights(lab.L.m(), win, 0);
    if (lab.kind == ConstituentKind::Full) return all;

    const long long c1 = lab.L.c1_int();
    const long long c2 = lab.L.c2_int();
    std::vector<Weight> out;
    for (const Weight& w : all) {
        const auto lw = l_row(w);
        bool keep = false;
        switch (lab.kind) {
            case ConstituentKind::Rhat:
                keep = lw[lab.r - 1] <= c1 && lw[lab.s - 1] > c2;
                break;
            case ConstituentKind::Rminus:
                keep = lw[lab.r - 1] <= c1 && lw[lab.s - 1] <= c2;
                break;
            case ConstituentKind::Rplus:
                keep = lw[lab.r - 1] > c1 && lw[lab.s - 1] > c2;
                break;
            case ConstituentKind::Rbreve:
                keep = lw[lab.r - 1] > c1 && lw[lab.s - 1] <= c2;
                break;
            case ConstituentKind::RtildePlus:
                keep = lw[lab.s - 1] > c2;
                break;
            case ConstituentKind::RtildeMinus:
                keep = lw[lab.s - 1] <= c2;
                break;
            case ConstituentKind::RplusOne:
                keep = lw[lab.r - 1] > c1;
                break;
            case ConstituentKind::RminusOne:
                keep = lw[lab.r - 1] <= c1;
                break;
            default:
                break;
        }
        if (keep) out.push_back(w);
    }
    return out;
}

ConstituentLabel normal_form(const ConstituentLabel& lab, std::vector<std::string>* chain) {
    ConstituentLabel cur = lab;
    if (chain) chain->push_back(cur.name());
    for (int guard = 0; guard < 8 * (cur.L.n() + 2); ++guard) {
        const int n = cur.L.n();
        ConstituentLabel next = cur;
        bool changed = true;
        switch (cur.kind) {
            case ConstituentKind::Rhat:
                if (cur.r == 1 && cur.s == n)
                    next = make_label(ConstituentKind::FiniteDim, 0, 0, cur.L);
                else if (cur.s < n)
                    next = make_label(ConstituentKind::Rminus, cur.r, cur.s + 1,
                                      cur.L.permuted(cur.s, n + 1));
                else if (cur.r > 1)
                    next = make_label(ConstituentKind::Rplus, cur.r - 1, cur.s,
                                      cur.L.permuted(cur.r - 1, n));
                else
                    changed = false;
                break;
            case ConstituentKind::Rbreve:
                next = make_label(ConstituentKind::Rminus, cur.r + 1, cur.s,
                                  cur.L.permuted(cur.r, n));
                break;
            case ConstituentKind::Rminus:
                if (cur.r != 1) {
                    if (cur.r != cur.s)
                        next = make_label(ConstituentKind::Rplus, cur.r - 1, cur.s - 1,
                                          cur.L.permuted(cur.r - 1, n).permuted(cur.s - 1, n + 1));
                    else
                        next = make_label(
                            ConstituentKind::Rplus, cur.r - 1, cur.r - 1,
                            cur.L.permuted(n, n + 1).permuted(cur.r - 1, n));
                } else {
                    changed = false;
                }
                break;
            case ConstituentKind::RtildeMinus:
                if (cur.s != 1)
                    next = make_label(ConstituentKind::RtildePlus, cur.r, cur.s - 1,
                                      cur.L.permuted(cur.s - 1, n + 1));
                else
                    changed = false;
                break;
            case ConstituentKind::RminusOne:
                if (cur.r != 1)
                    next = make_label(ConstituentKind::RtildePlus, cur.r - 1, cur.r - 1,
                                      cur.L.permuted(cur.r - 1, n + 1));
                else
                    changed = false;
                break;
            case ConstituentKind::RplusOne:
                if (cur.r != n)
                    next = make_label(ConstituentKind::RtildeMinus, cur.r, cur.r + 1,
                                      cur.L.permuted(cur.r, n + 1));
                else
                    changed = false;
                break;
            case ConstituentKind::Full: {
                // T_{c1,c2} ~ T_{c2,c1}: order the pair.
                const Complex a = cur.L.c1, b = cur.L.c2;
                if (std::make_pair(a.real(), a.imag()) < std::make_pair(b.real(), b.imag())) {
                    next.L.c1 = b;
                    next.L.c2 = a;
                } else {
                    changed = false;
                }
                break;
            }
            default:
                changed = false;
                break;
        }
        if (!changed) return cur;
        cur = next;
        if (chain) chain->push_back(cur.name());
    }
    throw std::logic_error("normal_form: rewrite did not terminate");
}

namespace {

// Per-coordinate window box on m_{in} of a label's representation.
void window_box(const Weight& m, const Window& win, std::vector<long long>& lo,
                std::vector<long long>& hi) {
    const int n = static_cast<int>(m.size()) + 1;
    lo.assign(n, 0);
    hi.assign(n, 0);
    if (n == 1) {
        lo[0] = -win.lower_slack;
        hi[0] = win.upper_slack;
        return;
    }
    hi[0] = m[0] + win.upper_slack;
    lo[0] = m[0];
    for (int i = 1; i < n - 1; ++i) {
        hi[i] = m[i - 1];
        lo[i] = m[i];
    }
    hi[n - 1] = m[n - 2];
    lo[n - 1] = m[n - 2] - win.lower_slack;
}

} // namespace

EquivalenceWitness equivalent(const ConstituentLabel& a, const ConstituentLabel& b,
                              const Window& win) {
    EquivalenceWitness w;
    std::vector<std::string> ca, cb;
    const ConstituentLabel na = normal_form(a, &ca);
    const ConstituentLabel nb = normal_form(b, &cb);
    w.equivalent = (na == nb);
    w.chain = ca;
    w.chain.push_back("==" + na.name() + (w.equivalent ? " == " : " != ") + nb.name() + "==");
    w.chain.insert(w.chain.end(), cb.rbegin(), cb.rend());

    // Necessary condition: same compact content, compared on the common box.
    auto sa = constituent_weights(a, win);
    auto sb = constituent_weights(b, win);
    const int n = a.L.n();
    if (n != b.L.n()) {
        w.weight_sets_match = false;
        return w;
    }
    std::vector<long long> lo1, hi1, lo2, hi2;
    window_box(a.L.m(), win, lo1, hi1);
    window_box(b.L.m(), win, lo2, hi2);
    for (int i = 0; i < n; ++i) {
        lo1[i] = std::max(lo1[i], lo2[i]);
        hi1[i] = std::min(hi1[i], hi2[i]);
    }
    auto clip = [&](std::vector<Weight>& v) {
        v.erase(std::remove_if(v.begin(), v.end(),
                               [&](const Weight& x) {
                                   for (int i = 0; i < n; ++i)
                                       if (x[i] < lo1[i] || x[i] > hi1[i]) return true;
                                   return false;
                               }),
                v.end());
    };
    clip(sa);
    clip(sb);
    w.weight_sets_match = (sa == sb);
    return w;
}

bool weight_set_invariant(const WindowedRep& rep, const std::set<Weight>& S) {
    bool ok = true;
    auto scan = [&](const SparseOperator& op) {
        op.for_each([&](Eigen::Index r, Eigen::Index c, Complex v) {
            if (std::abs(v) < 1e-13) return;
            const Weight& wc = rep.basis.weights[rep.basis.weight_of[c]];
            const Weight& wr = rep.basis.weights[rep.basis.weight_of[r]];
            if (S.count(wc) && !S.count(wr)) ok = false;
        });
    };
    for (const auto& op : rep.gens.e) scan(op);
    for (const auto& op : rep.gens.f) scan(op);
    return ok;
}

bool weight_set_connected(const WindowedRep& rep, const std::set<Weight>& S) {
    // Reachability is a within-window statement: clip to the rep's weights.
    std::map<Weight, int> id;
    for (const Weight& w : S)
        if (rep.basis.weight_index(w) >= 0) id.emplace(w, static_cast<int>(id.size()));
    if (id.empty()) return true;
    std::vector<int> parent(id.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto scan = [&](const SparseOperator& op) {
        op.for_each([&](Eigen::Index r, Eigen::Index c, Complex v) {
            if (std::abs(v) < 1e-13) return;
            const Weight& wc = rep.basis.weights[rep.basis.weight_of[c]];
            const Weight& wr = rep.basis.weights[rep.basis.weight_of[r]];
            auto ic = id.find(wc), ir = id.find(wr);
            if (ic != id.end() && ir != id.end()) parent[find(ic->second)] = find(ir->second);
        });
    };
    scan(rep.gens.e.back());
    scan(rep.gens.f.back());
    const int root = find(0);
    for (size_t i = 1; i < parent.size(); ++i)
        if (find(static_cast<int>(i)) != root) return false;
    return true;
}

} // namespace uqrep
