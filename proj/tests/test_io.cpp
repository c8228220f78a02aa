#include <doctest.h>

#include <sstream>

#include "msearch/io.hpp"
#include "msearch/solver.hpp"

using namespace msearch;

TEST_CASE("trace round trip is bit exact") {
    const StrategyParams params = make_params(2, Variant::even_optimal);
    const Trajectory traj = build_strategy(params, 3);
    const TraceHeader header = TraceHeader::from_params(params, 3);
    const std::string text = trace_to_jsonl(header, traj);

    const TraceFile loaded = trace_from_jsonl(text);
    CHECK(loaded.header.p == 2);
    CHECK(loaded.header.variant == Variant::even_optimal);
    CHECK(loaded.header.a == params.a);
    REQUIRE(loaded.header.r.has_value());
    CHECK(*loaded.header.r == params.r);
    REQUIRE(loaded.trajectory.segments().size() == traj.segments().size());
    for (std::size_t i = 0; i < traj.segments().size(); ++i)
        CHECK(loaded.trajectory.segments()[i] == traj.segments()[i]);
}

TEST_CASE("header parameters rebuild the identical trace") {
    const StrategyParams params = make_params(3, Variant::practical_odd, 0.1);
    const Trajectory traj = build_strategy(params, 3);
    const TraceHeader header = TraceHeader::from_params(params, 3);
    const std::string text = trace_to_jsonl(header, traj);

    const TraceFile loaded = trace_from_jsonl(text);
    const Trajectory rebuilt = build_strategy(loaded.header.to_params(), loaded.header.rounds);
    REQUIRE(rebuilt.segments().size() == loaded.trajectory.segments().size());
    for (std::size_t i = 0; i < rebuilt.segments().size(); ++i)
        CHECK(rebuilt.segments()[i] == loaded.trajectory.segments()[i]);
}

TEST_CASE("parse errors carry the record index") {
    const StrategyParams params = make_params(1, Variant::odd_optimal);
    const Trajectory traj = build_strategy(params, 2);
    std::string text = trace_to_jsonl(TraceHeader::from_params(params, 2), traj);

    SUBCASE("broken json") {
        text.insert(text.find('\n', text.find('\n') + 1) + 1, "{oops\n");
        try {
            trace_from_jsonl(text);
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.record == 2);
        }
    }
    SUBCASE("missing header") {
        CHECK_THROWS_AS(trace_from_jsonl(""), parse_error);
    }
    SUBCASE("out-of-order sequence numbers") {
        std::istringstream in(text);
        std::string line, out;
        int n = 0;
        while (std::getline(in, line))
            if (n++ != 2) out += line + "\n";  // drop one record
        CHECK_THROWS_AS(trace_from_jsonl(out), parse_error);
    }
}

TEST_CASE("search annotations accept mode indices and the two keywords") {
    const std::string text =
        "{\"p\":2,\"variant\":\"even_optimal\",\"a\":1.9,\"r\":0.2,\"rounds\":1}\n"
        "{\"seq\":0,\"t0\":0,\"t1\":1,\"x0\":0,\"x1\":1,\"search\":\"none\"}\n"
        "{\"seq\":1,\"t0\":1,\"t1\":4,\"x0\":1,\"x1\":2,\"search\":\"all\"}\n"
        "{\"seq\":2,\"t0\":4,\"t1\":5,\"x0\":2,\"x1\":1,\"search\":1}\n";
    const TraceFile loaded = trace_from_jsonl(text);
    CHECK(loaded.trajectory.segments()[0].search.kind == SearchKind::none);
    CHECK(loaded.trajectory.segments()[1].search.kind == SearchKind::all_modes);
    CHECK(loaded.trajectory.segments()[2].search == Search::single(1));
}

TEST_CASE("table csv") {
    const std::string csv = table_to_csv(16);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "p,parity,cr");
    std::vector<std::string> rows;
    while (std::getline(in, line)) rows.push_back(line);
    REQUIRE(rows.size() == 16);
    CHECK(rows[0] == "1,odd,9.00000");
    CHECK(rows[7] == "8,even,26.55911");
    CHECK(rows[14] == "15,odd,44.31371");
}

TEST_CASE("parameter summaries") {
    CHECK(params_to_json(1, std::nullopt).find("\"cr\": 9.0") != std::string::npos);
    const std::string p2 = params_to_json(2, std::nullopt);
    CHECK(p2.find("\"r\"") != std::string::npos);
    CHECK(p2.find("\"bracket\"") != std::string::npos);
    const std::string practical = params_to_json(3, 0.1);
    CHECK(practical.find("\"cr_practical\"") != std::string::npos);
}

TEST_CASE("report json carries the evaluation") {
    const StrategyParams params = make_params(1, Variant::odd_optimal);
    const Trajectory traj = build_strategy(params, 4);
    CrReport report = empirical_cr(traj, params, worst_case_targets(params, 4));
    report.rounds_used = 4;
    const std::string json = report_to_json(report);
    CHECK(json.find("\"cr_analytic\"") != std::string::npos);
    CHECK(json.find("\"cr_empirical\"") != std::string::npos);
    CHECK(json.find("\"targets\"") != std::string::npos);
}
