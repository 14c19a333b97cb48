#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>

#include "kitpulse/lattice.hpp"

using namespace kitpulse;

namespace {

std::map<LinkType, int> bond_census(const HoneycombLattice& lat) {
    std::map<LinkType, int> c;
    for (const auto& b : lat.bonds) ++c[b.type];
    return c;
}

}  // namespace

TEST_CASE("single hexagon: 6 sites, 6 bonds, 1 plaquette") {
    const auto lat = build_patch(1, 1);
    CHECK(lat.n_sites == 6);
    CHECK(lat.bonds.size() == 6);
    CHECK(lat.plaquettes.size() == 1);
    const auto c = bond_census(lat);
    CHECK(c.at(LinkType::X) == 2);
    CHECK(c.at(LinkType::Y) == 2);
    CHECK(c.at(LinkType::Z) == 2);
    for (int s = 0; s < 6; ++s) CHECK(lat.degree(s) == 2);
    // alternating sublattices around the ring
    int a_count = 0;
    for (auto s : lat.sublattice) a_count += (s == 0);
    CHECK(a_count == 3);
}

TEST_CASE("two fused hexagons share one z-link") {
    const auto lat = build_patch(1, 2);
    CHECK(lat.n_sites == 10);
    CHECK(lat.bonds.size() == 11);
    CHECK(lat.plaquettes.size() == 2);
    const auto c = bond_census(lat);
    CHECK(c.at(LinkType::X) == 4);
    CHECK(c.at(LinkType::Y) == 4);
    CHECK(c.at(LinkType::Z) == 3);

    // exactly one bond is shared between the two plaquettes
    int shared = 0;
    for (const auto& b : lat.bonds) {
        int hits = 0;
        for (const auto& p : lat.plaquettes) {
            for (int k = 0; k < 6; ++k) {
                const int u = p.sites[k], v = p.sites[(k + 1) % 6];
                if ((b.i == u && b.j == v) || (b.i == v && b.j == u)) ++hits;
            }
        }
        if (hits == 2) {
            ++shared;
            CHECK(b.type == LinkType::Z);
        }
    }
    CHECK(shared == 1);
}

TEST_CASE("2x2 open patch") {
    const auto lat = build_patch(2, 2);
    CHECK(lat.n_sites == 16);
    CHECK(lat.bonds.size() == 19);
    CHECK(lat.plaquettes.size() == 4);
}

TEST_CASE("closed 2x2 patch is 3-regular with 8 sites") {
    const auto lat = build_patch(2, 2, Boundary::Closed);
    CHECK(lat.n_sites == 8);
    CHECK(lat.bonds.size() == 12);
    for (int s = 0; s < lat.n_sites; ++s) CHECK(lat.degree(s) == 3);
    CHECK_THROWS(build_patch(1, 2, Boundary::Closed));
}

TEST_CASE("canonical plaquette ring reads x,z,y,x,z,y") {
    const auto lat = build_patch(1, 2);
    for (const auto& p : lat.plaquettes) {
        CHECK(p.links[0] == LinkType::X);
        CHECK(p.links[1] == LinkType::Z);
        CHECK(p.links[2] == LinkType::Y);
        CHECK(p.links[3] == LinkType::X);
        // starts at the lowest-index candidate corner
        CHECK(p.sites[0] < p.sites[3]);
        // external (off-plaquette) links read z,y,x,z,y,x
        CHECK(lat.external_link_type(p, 0) == LinkType::Z);
        CHECK(lat.external_link_type(p, 1) == LinkType::Y);
        CHECK(lat.external_link_type(p, 2) == LinkType::X);
    }
}

TEST_CASE("bond lookups") {
    const auto lat = build_patch(1, 1);
    CHECK(lat.bonds_at(0).size() == 2);
    CHECK(lat.bonds_of_type(LinkType::Z).size() == 2);
}

TEST_CASE("invalid sizes are rejected") {
    CHECK_THROWS(build_patch(0, 1));
    CHECK_THROWS(build_patch(1, -2));
}

TEST_CASE("lattice text round-trip") {
    const auto lat = build_patch(1, 2);
    std::istringstream in(lattice_to_text(lat));
    const auto back = lattice_from_text(in);
    CHECK(back.n_sites == lat.n_sites);
    REQUIRE(back.bonds.size() == lat.bonds.size());
    for (std::size_t k = 0; k < lat.bonds.size(); ++k) CHECK(back.bonds[k] == lat.bonds[k]);
    REQUIRE(back.plaquettes.size() == lat.plaquettes.size());
    for (std::size_t k = 0; k < lat.plaquettes.size(); ++k)
        CHECK(back.plaquettes[k].sites == lat.plaquettes[k].sites);
}

TEST_CASE("pattern text round-trip") {
    PulsePattern p;
    p.axis = {Rot::Z, Rot::None, Rot::X, Rot::Y};
    std::istringstream in(pattern_to_text(p));
    CHECK(pattern_from_text(in) == p);
}
