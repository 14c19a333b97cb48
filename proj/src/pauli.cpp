#include "kitpulse/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace kitpulse {

char axis_char(Axis a) {
    switch (a) {
        case Axis::X: return 'X';
        case Axis::Y: return 'Y';
        case Axis::Z: return 'Z';
    }
    return '?';
}

Axis axis_from_char(char c) {
    switch (c) {
        case 'X': case 'x': return Axis::X;
        case 'Y': case 'y': return Axis::Y;
        case 'Z': case 'z': return Axis::Z;
    }
    throw dimension_error(std::string("not a Pauli axis: ") + c);
}

std::string rot_name(Rot r) {
    switch (r) {
        case Rot::None: return "none";
        case Rot::X: return "x";
        case Rot::Y: return "y";
        case Rot::Z: return "z";
    }
    return "?";
}

Rot rot_from_name(const std::string& s) {
    if (s == "none" || s == "-" || s.empty()) return Rot::None;
    if (s == "x" || s == "X") return Rot::X;
    if (s == "y" || s == "Y") return Rot::Y;
    if (s == "z" || s == "Z") return Rot::Z;
    throw config_error("not a rotation axis: " + s);
}

PauliString::PauliString(cplx c, std::vector<std::pair<int, Axis>> a)
    : coeff(c), axes(std::move(a)) {
    std::sort(axes.begin(), axes.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (size_t k = 0; k + 1 < axes.size(); ++k)
        if (axes[k].first == axes[k + 1].first)
            throw dimension_error("duplicate site index in PauliString");
    for (const auto& [site, axis] : axes) {
        (void)axis;
        if (site < 0) throw dimension_error("negative site index");
    }
}

std::string PauliString::key() const {
    std::ostringstream os;
    for (const auto& [site, axis] : axes) os << site << axis_char(axis) << ' ';
    return os.str();
}

std::string PauliString::to_string() const {
    std::ostringstream os;
    os << '(' << coeff.real() << (coeff.imag() < 0 ? "" : "+") << coeff.imag() << "i)";
    if (axes.empty()) os << " I";
    for (const auto& [site, axis] : axes) os << ' ' << axis_char(axis) << site;
    return os.str();
}

PauliString pauli(Axis a, int site, cplx coeff) {
    return PauliString(coeff, {{site, a}});
}

namespace {

// sigma_a * sigma_b = phase * sigma_c (c meaningless when a == b).
inline void axis_product(Axis a, Axis b, Axis& c, cplx& phase) {
    if (a == b) {
        phase = 1.0;
        return;  // identity; caller drops the site
    }
    static constexpr cplx kI{0.0, 1.0};
    const int ia = static_cast<int>(a), ib = static_cast<int>(b);
    // cyclic (X->Y->Z->X) gives +i times the remaining axis
    const bool cyclic = (ib == (ia + 1) % 3);
    c = static_cast<Axis>(3 - ia - ib);
    phase = cyclic ? kI : -kI;
}

}  // namespace

PauliString multiply(const PauliString& a, const PauliString& b) {
    PauliString out;
    out.coeff = a.coeff * b.coeff;
    out.axes.reserve(a.axes.size() + b.axes.size());
    size_t i = 0, j = 0;
    while (i < a.axes.size() || j < b.axes.size()) {
        if (j == b.axes.size() ||
            (i < a.axes.size() && a.axes[i].first < b.axes[j].first)) {
            out.axes.push_back(a.axes[i++]);
        } else if (i == a.axes.size() || b.axes[j].first < a.axes[i].first) {
            out.axes.push_back(b.axes[j++]);
        } else {
            const int site = a.axes[i].first;
            Axis c;
            cplx phase;
            axis_product(a.axes[i].second, b.axes[j].second, c, phase);
            if (a.axes[i].second != b.axes[j].second) {
                out.axes.emplace_back(site, c);
                out.coeff *= phase;
            }
            ++i;
            ++j;
        }
    }
    return out;
}

PauliString conjugate_by_pulse(const PauliString& term, const PulsePattern& pattern) {
    PauliString out = term;
    for (const auto& [site, axis] : out.axes) {
        if (site >= pattern.n_sites())
            throw dimension_error("pulse pattern does not cover site " + std::to_string(site));
        const Rot r = pattern.axis[site];
        if (r == Rot::None) continue;
        if (static_cast<int>(r) - 1 != static_cast<int>(axis)) out.coeff = -out.coeff;
    }
    return out;
}

OperatorSum& OperatorSum::add(const PauliString& t) {
    if (t.max_site() >= n_sites)
        throw dimension_error("term exceeds operator size");
    terms.push_back(t);
    return *this;
}

std::string OperatorSum::to_string() const {
    std::ostringstream os;
    for (const auto& t : terms) os << t.to_string() << '\n';
    return os.str();
}

OperatorSum normalize(const OperatorSum& a, double epsilon) {
    std::map<std::string, std::pair<PauliString, cplx>> merged;
    for (const auto& t : a.terms) {
        auto [it, inserted] = merged.try_emplace(t.key(), std::make_pair(t, t.coeff));
        if (!inserted) it->second.second += t.coeff;
    }
    OperatorSum out(a.n_sites);
    for (auto& [key, tc] : merged) {
        (void)key;
        if (std::abs(tc.second) <= epsilon) continue;
        tc.first.coeff = tc.second;
        out.terms.push_back(std::move(tc.first));
    }
    return out;
}

OperatorSum add(const OperatorSum& a, const OperatorSum& b) {
    if (a.n_sites != b.n_sites) throw dimension_error("operator size mismatch");
    OperatorSum out(a.n_sites, a.terms);
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return normalize(out);
}

OperatorSum subtract(const OperatorSum& a, const OperatorSum& b) {
    return add(a, scale(b, -1.0));
}

OperatorSum scale(const OperatorSum& a, cplx factor) {
    OperatorSum out(a.n_sites, a.terms);
    for (auto& t : out.terms) t.coeff *= factor;
    return out;
}

OperatorSum multiply(const OperatorSum& a, const OperatorSum& b) {
    if (a.n_sites != b.n_sites) throw dimension_error("operator size mismatch");
    OperatorSum out(a.n_sites);
    out.terms.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) out.terms.push_back(multiply(ta, tb));
    return normalize(out);
}

OperatorSum commutator(const OperatorSum& a, const OperatorSum& b) {
    return subtract(multiply(a, b), multiply(b, a));
}

OperatorSum conjugate_by_pulse(const OperatorSum& a, const PulsePattern& pattern) {
    OperatorSum out(a.n_sites);
    out.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) out.terms.push_back(conjugate_by_pulse(t, pattern));
    return out;
}

bool is_hermitian(const OperatorSum& a, double tol) {
    for (const auto& t : normalize(a, 0.0).terms)
        if (std::abs(t.coeff.imag()) > tol) return false;
    return true;
}

double coefficient_one_norm(const OperatorSum& a) {
    double s = 0.0;
    for (const auto& t : normalize(a).terms)
        if (!t.is_identity()) s += std::abs(t.coeff);
    return s;
}

}  // namespace kitpulse
