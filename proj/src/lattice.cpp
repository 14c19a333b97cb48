#include "kitpulse/lattice.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace kitpulse {

char link_char(LinkType t) {
    switch (t) {
        case LinkType::X: return 'x';
        case LinkType::Y: return 'y';
        case LinkType::Z: return 'z';
    }
    return '?';
}

LinkType link_from_char(char c) {
    switch (c) {
        case 'x': case 'X': return LinkType::X;
        case 'y': case 'Y': return LinkType::Y;
        case 'z': case 'Z': return LinkType::Z;
    }
    throw config_error(std::string("not a link type: ") + c);
}

Axis link_axis(LinkType t) { return static_cast<Axis>(static_cast<int>(t)); }

int HoneycombLattice::degree(int site) const {
    int d = 0;
    for (const auto& b : bonds) d += (b.i == site || b.j == site);
    return d;
}

std::vector<int> HoneycombLattice::bonds_at(int site) const {
    std::vector<int> out;
    for (size_t k = 0; k < bonds.size(); ++k)
        if (bonds[k].i == site || bonds[k].j == site) out.push_back(static_cast<int>(k));
    return out;
}

std::vector<int> HoneycombLattice::bonds_of_type(LinkType t) const {
    std::vector<int> out;
    for (size_t k = 0; k < bonds.size(); ++k)
        if (bonds[k].type == t) out.push_back(static_cast<int>(k));
    return out;
}

LinkType HoneycombLattice::external_link_type(const Plaquette& p, int position) const {
    const LinkType a = p.links[(position + 5) % 6];
    const LinkType b = p.links[position];
    return static_cast<LinkType>(3 - static_cast<int>(a) - static_cast<int>(b));
}

namespace {

// Around a hexagon the bond types read x,z,y,x,z,y.
constexpr std::array<LinkType, 6> kRingLinks = {LinkType::X, LinkType::Z, LinkType::Y,
                                                LinkType::X, LinkType::Z, LinkType::Y};

Plaquette canonical_plaquette(std::array<int, 6> sites) {
    // Candidate start positions are 0 and 3 (in-plaquette links x and y).
    const int start = (sites[0] < sites[3]) ? 0 : 3;
    Plaquette p;
    for (int k = 0; k < 6; ++k) {
        p.sites[k] = sites[(start + k) % 6];
        p.links[k] = kRingLinks[k];  // pattern invariant under rotation by 3
    }
    return p;
}

}  // namespace

HoneycombLattice build_patch(int rows, int cols, Boundary boundary) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("build_patch: rows and cols must be >= 1");
    const bool closed = boundary == Boundary::Closed;
    if (closed && (rows < 2 || cols < 2))
        throw std::invalid_argument("build_patch: closed patches need rows, cols >= 2");

    HoneycombLattice lat;
    std::map<std::array<int, 3>, int> cell_index;  // (sub, r, c) -> site
    std::set<std::array<int, 3>> bond_set;         // (min, max, type)

    auto canon = [&](int sub, int r, int c) -> std::array<int, 3> {
        if (closed) {
            int cc = ((c % cols) + cols) % cols;
            r += ((c - cc) / cols) * cols;  // column wrap shifts the axial row
            r = ((r % rows) + rows) % rows;
            c = cc;
        }
        return {sub, r, c};
    };
    auto site_of = [&](int sub, int r, int c) {
        auto key = canon(sub, r, c);
        auto [it, inserted] = cell_index.try_emplace(key, lat.n_sites);
        if (inserted) {
            ++lat.n_sites;
            lat.sublattice.push_back(static_cast<std::uint8_t>(sub));
        }
        return it->second;
    };

    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const int r = i - j, c = j;
            // Corners in the paper's 1..6 cycle; sub 1 = B, 0 = A.
            const std::array<int, 6> corner = {
                site_of(1, r, c),         site_of(0, r, c + 1),
                site_of(1, r, c + 1),     site_of(0, r + 1, c + 1),
                site_of(1, r + 1, c),     site_of(0, r + 1, c),
            };
            for (int k = 0; k < 6; ++k) {
                const int a = corner[k], b = corner[(k + 1) % 6];
                if (a == b)
                    throw std::invalid_argument("build_patch: degenerate closed patch");
                const std::array<int, 3> bkey = {std::min(a, b), std::max(a, b),
                                                 static_cast<int>(kRingLinks[k])};
                if (bond_set.insert(bkey).second)
                    lat.bonds.push_back({bkey[0], bkey[1], kRingLinks[k]});
            }
            lat.plaquettes.push_back(canonical_plaquette(corner));
        }
    }
    return lat;
}

std::array<int, 6> plaquette_sites(const HoneycombLattice& lattice, int p) {
    if (p < 0 || p >= static_cast<int>(lattice.plaquettes.size()))
        throw std::invalid_argument("plaquette index out of range");
    return lattice.plaquettes[p].sites;
}

std::string lattice_to_text(const HoneycombLattice& lattice) {
    std::ostringstream os;
    os << "sites " << lattice.n_sites << '\n';
    os << "sublattice";
    for (auto s : lattice.sublattice) os << ' ' << int(s);
    os << '\n';
    for (const auto& b : lattice.bonds)
        os << "bond " << b.i << ' ' << b.j << ' ' << link_char(b.type) << '\n';
    for (const auto& p : lattice.plaquettes) {
        os << "plaquette";
        for (int s : p.sites) os << ' ' << s;
        os << '\n';
    }
    return os.str();
}

HoneycombLattice lattice_from_text(std::istream& in) {
    HoneycombLattice lat;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "sites") {
            ls >> lat.n_sites;
        } else if (tag == "sublattice") {
            int v;
            while (ls >> v) lat.sublattice.push_back(static_cast<std::uint8_t>(v));
        } else if (tag == "bond") {
            int i, j;
            char t;
            ls >> i >> j >> t;
            lat.bonds.push_back({i, j, link_from_char(t)});
        } else if (tag == "plaquette") {
            std::array<int, 6> s{};
            for (auto& v : s) ls >> v;
            lat.plaquettes.push_back(canonical_plaquette(s));
        } else {
            throw config_error("lattice file: unknown tag " + tag);
        }
    }
    return lat;
}

std::string pattern_to_text(const PulsePattern& pattern) {
    std::ostringstream os;
    for (int s = 0; s < pattern.n_sites(); ++s)
        os << s << ' ' << rot_name(pattern.axis[s]) << '\n';
    return os.str();
}

PulsePattern pattern_from_text(std::istream& in) {
    std::map<int, Rot> entries;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int site;
        std::string name;
        if (!(ls >> site)) continue;
        ls >> name;
        entries[site] = rot_from_name(name);
    }
    PulsePattern p;
    if (entries.empty()) return p;
    p.axis.assign(entries.rbegin()->first + 1, Rot::None);
    for (auto [site, r] : entries) p.axis[site] = r;
    return p;
}

}  // namespace kitpulse
