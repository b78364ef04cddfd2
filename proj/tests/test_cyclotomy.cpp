#include <doctest.h>

#include <map>
#include <set>

#include "eqlc/cyclotomy.hpp"
#include "eqlc/errors.hpp"
#include "eqlc/numtheory.hpp"

using namespace eqlc;

namespace {

// Quotient by plain repeated multiplication modulo p^{2r}; small moduli only.
std::uint64_t naive_quotient(std::uint64_t p, unsigned r, std::uint64_t u) {
    if (u % p == 0) return 0;
    std::uint64_t pr = 1;
    for (unsigned i = 0; i < r; ++i) pr *= p;
    const std::uint64_t m = pr * pr, phi = pr / p * (p - 1);
    std::uint64_t t = 1;
    for (std::uint64_t i = 0; i < phi; ++i) t = t * (u % m) % m;
    return (t - 1) / pr % pr;
}

std::set<std::uint64_t> as_set(std::span<const std::uint64_t> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("listed classes at 27 and 125") {
    const auto p3 = build_partition(3, 3);
    CHECK(as_set(p3[5]) == std::set<std::uint64_t>{4, 23});
    CHECK(as_set(p3[6]) == std::set<std::uint64_t>{10, 17});
    CHECK(as_set(p3[7]) == std::set<std::uint64_t>{2, 25});
    CHECK(as_set(p3[8]) == std::set<std::uint64_t>{5, 22});

    const auto p5 = build_partition(5, 3);
    CHECK(as_set(p5[13]) == std::set<std::uint64_t>{73, 89, 52, 36});
    CHECK(as_set(p5[24]) == std::set<std::uint64_t>{106, 83, 19, 42});

    const auto p32 = build_partition(3, 2);
    CHECK(p32.class_count() == 3);
    std::set<std::uint64_t> all;
    for (const auto& c : p32.classes()) {
        CHECK(c.size() == 2);
        all.insert(c.begin(), c.end());
    }
    CHECK(all == std::set<std::uint64_t>{1, 2, 4, 5, 7, 8});
    CHECK(p32.nonunits() == std::vector<std::uint64_t>{0, 3, 6});
}

TEST_CASE("membership") {
    const auto p3 = build_partition(3, 3);
    CHECK(p3.class_of(4) == 5u);
    CHECK_FALSE(p3.class_of(6).has_value());
    CHECK(class_of(build_partition(5, 3), 42) == 24u);
    CHECK_THROWS_AS(p3.class_of(27), RangeError);
}

TEST_CASE("partition invariants against a naive quotient") {
    for (std::uint64_t p : {3u, 5u, 7u})
        for (unsigned r : {2u, 3u}) {
            const auto part = build_partition(p, r);
            const std::uint64_t pr = checked_pow(p, r);
            REQUIRE(part.class_count() == pr / p);
            std::map<std::uint64_t, std::size_t> seen;
            for (std::size_t l = 0; l < part.class_count(); ++l) {
                CHECK(part[l].size() == p - 1);
                for (auto u : part[l]) {
                    CHECK(naive_quotient(p, r - 1, u) == l);
                    ++seen[u];
                }
            }
            CHECK(seen.size() + part.nonunits().size() == pr);
            for (auto u : part.nonunits()) CHECK(u % p == 0);
        }
}

TEST_CASE("generator construction gives the same partition for every valid g") {
    for (unsigned r : {2u, 3u}) {
        const std::uint64_t pr = checked_pow(3, r);
        const auto canonical = build_partition(3, r);
        int valid = 0;
        for (std::uint64_t g = 2; g < pr; ++g) {
            if (!is_primitive_root(g, pr) || euler_quotient(3, r - 1, g) != 1) {
                if (g % 3) CHECK_THROWS_AS(build_partition_via_generator(3, r, g), InvalidArgument);
                continue;
            }
            ++valid;
            CHECK(build_partition_via_generator(3, r, g) == canonical);
        }
        CHECK(valid > 0);
    }
    CHECK(build_partition_via_generator(3, 3, 11) == build_partition(3, 3));
    CHECK(build_partition_via_generator(5, 3, 3) == build_partition(5, 3));
}

TEST_CASE("projection one level down") {
    for (std::uint64_t p : {3u, 5u})
        for (unsigned r : {2u, 3u}) {
            const auto up = build_partition(p, r + 1), down = build_partition(p, r);
            const std::uint64_t pr = checked_pow(p, r);
            for (std::size_t l = 0; l < up.class_count(); ++l) {
                std::set<std::uint64_t> proj, mod_p;
                for (auto u : up[l]) {
                    proj.insert(u % pr);
                    mod_p.insert(u % p);
                }
                CHECK(proj == as_set(down[l % down.class_count()]));
                CHECK(mod_p.size() == p - 1);
            }
        }
}

TEST_CASE("serialization") {
    const std::string text = serialize(build_partition(3, 2));
    CHECK(text.substr(0, text.find('\n')) == "0: 1 8");
    std::size_t lines = 0;
    for (char c : text) lines += c == '\n';
    CHECK(lines == 3);
}

TEST_CASE("generalized classes") {
    const std::uint64_t g25 = find_generator(5, 2);
    const auto a = build_generalized(5, 2, 4, g25);
    CHECK(a.classes.size() == 20);
    for (const auto& c : a.classes) CHECK(c.size() == 1);

    const auto b = build_generalized(5, 2, 2, g25);
    CHECK(b.classes.size() == 10);
    std::set<std::uint64_t> units;
    for (const auto& c : b.classes) {
        CHECK(c.size() == 2);
        units.insert(c.begin(), c.end());
    }
    CHECK(units.size() == 20);

    // f-fold unions with the canonical generator reproduce the quotient classes
    for (auto [p, f] : {std::pair<std::uint64_t, std::uint64_t>{3, 2}, {5, 2}, {5, 4}}) {
        const std::uint64_t g = find_generator(p, 3);
        const auto gp = build_generalized(p, 3, f, g);
        const auto part = build_partition(p, 3);
        const std::uint64_t q = p * p;
        CHECK(gp.classes.size() == f * q);
        for (std::uint64_t l = 0; l < q; ++l) {
            std::set<std::uint64_t> u;
            for (std::uint64_t i = 0; i < f; ++i) u.insert(gp.classes[l + i * q].begin(), gp.classes[l + i * q].end());
            CHECK(u == as_set(part[l]));
        }
    }

    CHECK_THROWS_AS(build_generalized(5, 2, 3, g25), InvalidArgument);
    CHECK_THROWS_AS(build_generalized(7, 2, 4, 3), InvalidArgument);
    CHECK_THROWS_AS(build_generalized(5, 2, 2, 4), InvalidArgument);
}
