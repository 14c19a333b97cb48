#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "kitpulse/errors.hpp"
#include "kitpulse/pauli.hpp"

namespace kitpulse {

enum class LinkType : std::uint8_t { X = 0, Y = 1, Z = 2 };

char link_char(LinkType t);
LinkType link_from_char(char c);
Axis link_axis(LinkType t);

struct Bond {
    int i, j;  // i < j
    LinkType type;
    bool operator==(const Bond&) const = default;
};

// Six-site cycle; links[k] is the bond type between sites[k] and
// sites[(k+1)%6].  Canonical order starts at the lowest-index site
// whose two in-plaquette links are x and y, traversed x-link first,
// so the off-plaquette link sequence reads z,y,x,z,y,x.
struct Plaquette {
    std::array<int, 6> sites;
    std::array<LinkType, 6> links;
};

enum class Boundary { Open, Closed };

struct HoneycombLattice {
    int n_sites = 0;
    std::vector<Bond> bonds;
    std::vector<Plaquette> plaquettes;
    std::vector<std::uint8_t> sublattice;  // 0 = A, 1 = B

    int degree(int site) const;
    // Bond indices incident to `site`.
    std::vector<int> bonds_at(int site) const;
    std::vector<int> bonds_of_type(LinkType t) const;
    // Off-plaquette link type of a plaquette member site (the link type
    // not used by its two in-plaquette bonds).
    LinkType external_link_type(const Plaquette& p, int position) const;
};

// rows x cols hexagons; row neighbors share an x-link, column
// neighbors share a z-link.  Open boundaries keep all six sites per
// hexagon and simply omit bonds to absent neighbors.
HoneycombLattice build_patch(int rows, int cols, Boundary boundary = Boundary::Open);

// Sites of plaquette p in canonical cyclic order.
std::array<int, 6> plaquette_sites(const HoneycombLattice& lattice, int p);

std::string lattice_to_text(const HoneycombLattice& lattice);
HoneycombLattice lattice_from_text(std::istream& in);

std::string pattern_to_text(const PulsePattern& pattern);
PulsePattern pattern_from_text(std::istream& in);

}  // namespace kitpulse
