#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "grids.hpp"
#include "pda.hpp"
#include "sim.hpp"

using namespace pda;
using testgrid::make;

namespace {

const Pda& exchange_4x2() {
    static const Pda p = make(2, "* 1 / 1 * / * 2 / 2 *");
    return p;
}

// two 4-byte files, one byte per packet, every byte distinct
FileLibrary tiny_library() {
    return FileLibrary({{0x11, 0x12, 0x13, 0x14}, {0x21, 0x22, 0x23, 0x24}}, 4);
}

std::uint8_t byte_of(int file, int packet) {
    return static_cast<std::uint8_t>(file * 16 + packet);
}

} // namespace

TEST_CASE("placement stores exactly the starred packets of every file") {
    const auto caches = place(exchange_4x2(), tiny_library());
    REQUIRE(caches.size() == 2);
    CHECK(caches[0].packet_ids() ==
          std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {2, 1}, {2, 3}});
    CHECK(caches[1].packet_ids() ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {2, 2}, {2, 4}});
    for (const auto& c : caches)
        CHECK(c.total_bytes() == 4); // Z * N * packet_len = 2*2*1
    CHECK(caches[0].contains(1, 1));
    CHECK_FALSE(caches[0].contains(1, 2));
    CHECK(caches[0].packet(2, 3)[0] == byte_of(2, 3));
    CHECK_THROWS_AS(caches[0].packet(1, 2), std::runtime_error);
}

TEST_CASE("delivery sends one XOR per symbol, paired off the grid cells") {
    const auto lib = tiny_library();
    for (int d1 = 1; d1 <= 2; ++d1)
        for (int d2 = 1; d2 <= 2; ++d2) {
            const auto msgs = deliver(exchange_4x2(), lib, Demand{{d1, d2}});
            REQUIRE(msgs.size() == 2);
            // symbol 1 covers cells (1,2) and (2,1): user 2 needs packet 1,
            // user 1 needs packet 2
            CHECK(msgs[0].symbol == 1);
            CHECK(msgs[0].contributors == std::vector<CellRef>{{1, 2}, {2, 1}});
            REQUIRE(msgs[0].payload.size() == 1);
            CHECK(msgs[0].payload[0] == (byte_of(d2, 1) ^ byte_of(d1, 2)));
            // symbol 2 covers cells (3,2) and (4,1)
            CHECK(msgs[1].symbol == 2);
            CHECK(msgs[1].contributors == std::vector<CellRef>{{3, 2}, {4, 1}});
            CHECK(msgs[1].payload[0] == (byte_of(d2, 3) ^ byte_of(d1, 4)));
        }
}

TEST_CASE("every user decodes its file byte-exactly") {
    const auto lib = tiny_library();
    const auto caches = place(exchange_4x2(), lib);
    for (int d1 = 1; d1 <= 2; ++d1)
        for (int d2 = 1; d2 <= 2; ++d2) {
            const Demand d{{d1, d2}};
            const auto msgs = deliver(exchange_4x2(), lib, d);
            CHECK(decode(exchange_4x2(), 1, caches[0], msgs, d, 4) == lib.original(d1));
            CHECK(decode(exchange_4x2(), 2, caches[1], msgs, d, 4) == lib.original(d2));
        }
}

TEST_CASE("delivery rejects malformed demands") {
    const auto lib = tiny_library();
    CHECK_THROWS_AS(deliver(exchange_4x2(), lib, Demand{{1}}), std::invalid_argument);
    CHECK_THROWS_AS(deliver(exchange_4x2(), lib, Demand{{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(deliver(exchange_4x2(), lib, Demand{{0, 1}}), std::invalid_argument);
}

TEST_CASE("an all-star array caches everything and broadcasts nothing") {
    const Pda p(2, 1, 0, {Cell::star(), Cell::star()});
    FileLibrary lib({{1, 2, 3, 4}, {5, 6, 7, 8}}, 2);
    const auto report = run_end_to_end(p, lib, Demand{{2}});
    CHECK(report.all_ok());
    CHECK(report.symbols == 0);
    CHECK(report.transmitted_bytes == 0);
    CHECK(report.cache_bytes == 8); // both full files
    CHECK(report.summary() == "users_ok=1 S=0 rate=0/2 cache_bytes=8");
}

TEST_CASE("files of uneven length are padded, decoded output is not") {
    FileLibrary lib({{9, 8, 7, 6, 5}, {1, 2, 3}}, 4);
    CHECK(lib.packet_len() == 2); // least multiple of 4 covering 5 bytes
    CHECK(lib.padded_len() == 8);
    CHECK(lib.original(1).size() == 5);
    CHECK(lib.packet(2, 2).size() == 2);
    CHECK(lib.packet(2, 2)[0] == 3);
    CHECK(lib.packet(2, 2)[1] == 0); // padding byte

    const auto report = run_end_to_end(exchange_4x2(), lib, Demand{{2, 1}});
    CHECK(report.all_ok());

    const auto caches = place(exchange_4x2(), lib);
    const Demand d{{2, 1}};
    const auto msgs = deliver(exchange_4x2(), lib, d);
    CHECK(decode(exchange_4x2(), 1, caches[0], msgs, d, 3) ==
          std::vector<std::uint8_t>{1, 2, 3});
    CHECK_THROWS_AS(decode(exchange_4x2(), 1, caches[0], msgs, d, 9),
                    std::invalid_argument); // longer than the padded file
}

TEST_CASE("traffic and cache sizes follow the array parameters") {
    for (const Pda* p : {&exchange_4x2()}) {
        FileLibrary lib = FileLibrary::seeded(3, 60, p->rows(), 7);
        Demand d{std::vector<int>(static_cast<std::size_t>(p->cols()), 1)};
        const auto report = run_end_to_end(*p, lib, d);
        CHECK(report.all_ok());
        CHECK(report.transmitted_bytes ==
              static_cast<std::size_t>(p->symbol_count()) * lib.packet_len());
        CHECK(report.cache_bytes == static_cast<std::size_t>(p->column_star_count(1)) * 3 *
                                        lib.packet_len());
        CHECK(report.rate == Rational(p->symbol_count(), p->rows()));
    }
}

TEST_CASE("summary string is stable") {
    FileLibrary lib = FileLibrary::seeded(2, 64, 4, 0);
    const auto report = run_end_to_end(exchange_4x2(), lib, Demand{{1, 2}});
    CHECK(report.summary() == "users_ok=11 S=2 rate=2/4 cache_bytes=64");
    CHECK(report.rate == Rational(1, 2)); // the field itself is reduced
}

TEST_CASE("demand enumeration is lexicographic and complete") {
    std::vector<std::string> seen;
    for_each_demand(3, 2, [&](const Demand& d) { seen.push_back(d.str()); });
    CHECK(seen == std::vector<std::string>{"1,1", "1,2", "1,3", "2,1", "2,2", "2,3", "3,1",
                                           "3,2", "3,3"});
}

TEST_CASE("decoding fails loudly when a needed packet was never cached") {
    // C3 fails here, so both users lack the side packets their XORs need
    const Pda broken = make(2, "1 2 / 2 1");
    FileLibrary lib({{1, 2}, {3, 4}}, 2);
    const auto caches = place(broken, lib);
    CHECK(caches[0].packet_count() == 0);
    const Demand d{{1, 2}};
    const auto msgs = deliver(broken, lib, d);
    CHECK_THROWS_AS(decode(broken, 1, caches[0], msgs, d, 2), std::runtime_error);
    CHECK_THROWS_AS(run_end_to_end(broken, lib, d), std::invalid_argument);
}

TEST_CASE("seeded libraries are reproducible") {
    const auto a = FileLibrary::seeded(2, 32, 4, 42);
    const auto b = FileLibrary::seeded(2, 32, 4, 42);
    const auto c = FileLibrary::seeded(2, 32, 4, 43);
    CHECK(a.original(1) == b.original(1));
    CHECK(a.original(2) == b.original(2));
    CHECK(a.original(1) != c.original(1));
    CHECK_THROWS_AS(FileLibrary({}, 4), std::invalid_argument);
    CHECK_THROWS_AS(FileLibrary({{1}}, 0), std::invalid_argument);
}

TEST_CASE("end-to-end succeeds across constructions and every demand") {
    const Pda p = make(2, "* 1 / 1 * / * 2 / 2 *");
    FileLibrary lib = FileLibrary::seeded(2, 24, p.rows(), 5);
    int count = 0;
    for_each_demand(2, p.cols(), [&](const Demand& d) {
        const auto report = run_end_to_end(p, lib, d);
        CHECK(report.all_ok());
        ++count;
    });
    CHECK(count == 4);
}
