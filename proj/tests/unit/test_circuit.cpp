#include <doctest.h>

#include "qgb/circuit.hpp"
#include "qgb/errors.hpp"

using namespace qgb;

TEST_SUITE_BEGIN("circuit");

TEST_CASE("gate name round trip") {
    for (const GateKind kind : {GateKind::H, GateKind::RZ, GateKind::RX, GateKind::SX, GateKind::CX, GateKind::RXX})
        CHECK(gate_kind_from_name(gate_name(kind)) == kind);
    CHECK_THROWS_AS(gate_kind_from_name("cz"), validation_error);
}

TEST_CASE("gate classification") {
    CHECK(is_two_qubit(GateKind::CX));
    CHECK(is_two_qubit(GateKind::RXX));
    CHECK_FALSE(is_two_qubit(GateKind::H));
    CHECK(is_parameterized(GateKind::RZ));
    CHECK(is_parameterized(GateKind::RX));
    CHECK(is_parameterized(GateKind::RXX));
    CHECK_FALSE(is_parameterized(GateKind::SX));
}

TEST_CASE("circuit validation") {
    Circuit ok{2, {GateOp::h(0), GateOp::rx(1, 0), GateOp::cx(0, 1)}, 1};
    CHECK_NOTHROW(ok.validate());

    Circuit bad_qubit{2, {GateOp::h(2)}, 0};
    CHECK_THROWS_AS(bad_qubit.validate(), validation_error);

    Circuit negative{2, {GateOp::h(-1)}, 0};
    CHECK_THROWS_AS(negative.validate(), validation_error);

    Circuit same_qubits{2, {GateOp::cx(1, 1)}, 0};
    CHECK_THROWS_AS(same_qubits.validate(), validation_error);

    Circuit slot_oob{2, {GateOp::rz(0, 1)}, 1};
    CHECK_THROWS_AS(slot_oob.validate(), validation_error);

    Circuit unused_slot{2, {GateOp::rz(0, 0)}, 2};
    CHECK_THROWS_AS(unused_slot.validate(), validation_error);

    Circuit fixed_with_slot{2, {{GateKind::SX, 0, -1, 0}}, 1};
    CHECK_THROWS_AS(fixed_with_slot.validate(), validation_error);

    // Shared slots are allowed; n_params counts distinct slots.
    Circuit shared{2, {GateOp::rz(0, 0), GateOp::rz(1, 0)}, 1};
    CHECK_NOTHROW(shared.validate());
}

TEST_SUITE_END();
