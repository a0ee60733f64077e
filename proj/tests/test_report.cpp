#include <doctest.h>

#include <json.hpp>

#include "alexfoam/report.hpp"

using namespace alexfoam;

TEST_CASE("pipeline on the trefoil") {
	Report r = run_pipeline(parse_closure("strands=2; word=1 1 1; bp=2"));
	CHECK_FALSE(r.rectified);
	CHECK_FALSE(r.experimental);
	CHECK(r.euler_matches);
	CHECK(r.hom.poincare.str() == "q^2 + t + t^2 q^-2");

	std::string txt = report_text(r);
	CHECK(txt.find("poincare: q^2 + t + t^2 q^-2") != std::string::npos);
	CHECK(txt.find("euler matches alexander: yes") != std::string::npos);

	auto j = nlohmann::json::parse(report_json(r));
	CHECK(j["strands"] == 2);
	CHECK(j["bp"] == 2);
	CHECK(j["euler_matches_alexander"] == true);
	CHECK(j["poincare"] == "q^2 + t + t^2 q^-2");
	CHECK(j["betti"].size() == 3);
	CHECK(j["vertex_dims"] == std::vector<long>{4, 6, 3, 0});
}

TEST_CASE("pipeline rectifies off-mark closures") {
	Report r = run_pipeline(parse_closure("strands=2; word=1 1 1; bp=1"));
	CHECK(r.rectified);
	CHECK(r.run.bp_pos == 2);
	CHECK(r.hom.poincare.str() == "q^2 + t + t^2 q^-2");

	Report raw = run_pipeline(parse_closure("strands=2; word=1 1 1; bp=1"), false);
	CHECK(raw.experimental);
	auto j = nlohmann::json::parse(report_json(raw));
	CHECK(j["experimental"] == true);
}

TEST_CASE("pipeline rejects links") {
	CHECK_THROWS_AS(run_pipeline(parse_closure("strands=3; word=1; bp=1")),
	                std::invalid_argument);
}
