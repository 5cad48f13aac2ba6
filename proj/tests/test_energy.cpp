#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "wsnsim/energy_ledger.hpp"
#include "wsnsim/errors.hpp"
#include "wsnsim/messages.hpp"

using namespace wsnsim;

TEST_CASE("table rates: data 1, interest 0.25") {
    EnergyLedger ledger(2, Energy::from_units(100));
    auto r = ledger.charge_tx(0, MessageClass::Data);
    CHECK(r.charged);
    CHECK(r.alive);
    CHECK(ledger.residual(0) == Energy::from_units(99));

    r = ledger.charge_tx(1, MessageClass::Interest);
    CHECK(ledger.residual(1) == Energy::from_units(99.75));

    EnergyLedger rx(1, Energy::from_units(50));
    rx.charge_rx(0, MessageClass::Data);
    CHECK(rx.residual(0) == Energy::from_units(49));
}

TEST_CASE("a depleted node is never charged and never transmits") {
    EnergyLedger ledger(1, Energy::from_units(100));
    ledger.set_residual(0, Energy::zero());
    const Energy consumed_before = ledger.total_consumed();
    for (int i = 0; i < 5; ++i) {
        const auto r = ledger.charge_tx(0, MessageClass::Data);
        CHECK_FALSE(r.charged);
        CHECK_FALSE(r.alive);
    }
    CHECK(ledger.residual(0) == Energy::zero());
    CHECK(ledger.total_consumed() == consumed_before);
}

TEST_CASE("charges floor at zero: the last fraction still buys one message") {
    EnergyLedger ledger(1, Energy::from_units(100));
    ledger.set_residual(0, Energy::from_units(0.1));
    const auto r = ledger.charge_rx(0, MessageClass::Interest);
    CHECK(r.charged);       // the message was received...
    CHECK_FALSE(r.alive);   // ...and the node is dead afterwards
    CHECK(ledger.residual(0) == Energy::zero());
}

TEST_CASE("k interest receptions match the closed form") {
    EnergyLedger ledger(1, Energy::from_units(100));
    for (int k = 1; k <= 40; ++k) {
        ledger.charge_rx(0, MessageClass::Interest);
        CHECK(ledger.residual(0) == Energy::from_millis(100'000 - 250 * k));
    }
}

TEST_CASE("total consumed: fresh ledger, one data hop, full reconciliation") {
    EnergyLedger ledger(4, Energy::from_units(100));
    CHECK(ledger.total_consumed() == Energy::zero());

    ledger.charge_tx(0, MessageClass::Data);
    ledger.charge_rx(1, MessageClass::Data);
    CHECK(ledger.total_consumed() == Energy::from_units(2));
}

TEST_CASE("unknown node ids are rejected") {
    EnergyLedger ledger(3, Energy::from_units(100));
    CHECK_THROWS_AS(ledger.charge_tx(3, MessageClass::Data), UnknownNode);
    CHECK_THROWS_AS(ledger.charge_rx(7, MessageClass::Interest), UnknownNode);
    CHECK_THROWS_AS(ledger.residual(3), UnknownNode);
}

TEST_CASE("property: conservation, monotonicity, dead silence over random sequences") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 6);
        EnergyLedger ledger(n, Energy::from_units(2ate Energy::from_units(2)));
        std::uint64_t data_events = 0, interest_events = 0;
        std::vector<Energy> prev(n, ledger.initial_energy());
        std::vector<bool> seen_dead(n, false);
        const int ops = 20 + static_cast<int>(rng() % 100);
        for (int i = 0; i < ops; ++i) {
            const NodeId node = static_cast<NodeId>(rng() % n);
            const MessageClass cls = (rng() & 1) ? MessageClass::Data : MessageClass::Interest;
            const bool tx = rng() & 1;
            const ChargeResult r =
                tx ? ledger.charge_tx(node, cls) : ledger.charge_rx(node, cls);
            if (seen_dead[node]) CHECK_FALSE(r.charged);  // dead stays silent
            if (r.charged) (cls == MessageClass::Data ? data_events : interest_events) += 1;
            CHECK(ledger.residual(node) <= prev[node]);  // monotone
            prev[node] = ledger.residual(node);
            if (!r.alive) seen_dead[node] = true;
        }
        // Conservation is exact only when nothing was floored; drain-free
        // check: recompute from residuals instead.
        Energy recomputed = Energy::zero();
        for (NodeId id = 0; id < n; ++id)
            recomputed += ledger.initial_energy() - ledger.residual(id);
        CHECK(recomputed == ledger.total_consumed());
    }
}

TEST_CASE("message kinds map to the expected billing class") {
    CHECK(message_class(MessageKind::Data) == MessageClass::Data);
    CHECK(message_class(MessageKind::Adv) == MessageClass::Interest);
    CHECK(message_class(MessageKind::Rep) == MessageClass::Interest);
    CHECK(message_class(MessageKind::Interest) == MessageClass::Interest);
    CHECK(message_class(MessageKind::Query) == MessageClass::Interest);
    CHECK(message_class(MessageKind::QueryReply) == MessageClass::Interest);
}

TEST_CASE("exact decimal rendering") {
    CHECK(to_decimal_string(Energy::from_units(100)) == "100");
    CHECK(to_decimal_string(Energy::from_units(99.75)) == "99.75");
    CHECK(to_decimal_string(Energy::from_units(0.1)) == "0.1");
    CHECK(to_decimal_string(Energy::from_units(0.5)) == "0.5");
    CHECK(to_decimal_string(Energy::zero()) == "0");
}
