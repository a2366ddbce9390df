#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "lrc/problem.hpp"
#include "lrc/report.hpp"

using namespace lrc;
namespace fs = std::filesystem;

namespace {

const char* const aff1_text = R"({
  "name": "aff1",
  "field": "Q",
  "algebra": {"dim": 1, "unit": [1], "mult": [[[1]]]},
  "algebroid": {"rank": 2, "anchor": [[[0]], [[0]]],
                "bracket": [[[0, 0], [1, 0]], [[-1, 0], [0, 0]]]},
  "extension": {"k_indices": [0]}
})";

std::string corpus(const std::string& sub, const std::string& file) {
  return std::string(LRC_CORPUS_DIR) + "/" + sub + "/" + file;
}

RunOptions command(const std::string& c) {
  RunOptions o;
  o.command = c;
  return o;
}

}  // namespace

TEST(Problem, ParsesMinimalFile) {
  const auto p = parse_problem_json(aff1_text);
  EXPECT_EQ(p.name, "aff1");
  EXPECT_EQ(p.algebra_dim, 1u);
  EXPECT_EQ(p.rank, 2u);
  EXPECT_EQ(p.bracket[0][1], (RawVector{1, 0}));
  ASSERT_TRUE(p.extension && p.extension->k_indices);
  const auto inst = instantiate(p, Field<Rational>());
  EXPECT_TRUE(validate_algebroid(inst.algebroid).empty());
  EXPECT_EQ(cohomology_dims(ce_complex(inst.algebroid, inst.representation()).complex),
            (std::vector<std::size_t>{1, 1, 0}));
}

TEST(Problem, RoundTrip) {
  for (const auto& entry : fs::directory_iterator(std::string(LRC_CORPUS_DIR) + "/positive")) {
    const auto p = parse_problem_file(entry.path().string());
    const auto again = parse_problem_json(problem_to_json(p).dump());
    EXPECT_EQ(p, again) << entry.path();
  }
}

TEST(Problem, RationalScalars) {
  std::string text = aff1_text;
  text.replace(text.find("[1, 0]]"), 6, "[\"1/2\", 0]");
  const auto p = parse_problem_json(text);
  EXPECT_EQ(p.bracket[0][1][0], Rational(1, 2));
  const auto inst = instantiate(p, Field<Zp>(3));
  EXPECT_EQ(inst.algebroid.bracket_coefficient(0, 1, 0)[0], Zp(2, 3));
}

TEST(Problem, ShapeErrorNamesThePath) {
  try {
    parse_problem_file(corpus("negative", "bracket_length.json"));
    FAIL();
  } catch (const ShapeError& e) {
    EXPECT_EQ(e.path(), "algebroid.bracket[0][1]");
  }
}

TEST(Problem, MalformedJsonReportsLine) {
  try {
    parse_problem_file(corpus("negative", "malformed.json"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos) << e.what();
  }
}

TEST(Problem, MissingFieldIsNamed) {
  try {
    parse_problem_json(R"({"field": "Q", "algebra": {"dim": 1, "unit": [1]}})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("algebra.mult"), std::string::npos) << e.what();
  }
}

TEST(Problem, FieldForms) {
  std::string text = aff1_text;
  text.replace(text.find("\"Q\""), 3, R"({"type": "prime", "p": 5})");
  EXPECT_EQ(parse_problem_json(text).field.name(), "F_5");
  text = aff1_text;
  text.replace(text.find("\"Q\""), 3, R"({"type": "prime", "p": 6})");
  EXPECT_THROW(parse_problem_json(text), ParseError);
}

TEST(Problem, PositiveCorpusValidates) {
  for (const auto& entry : fs::directory_iterator(std::string(LRC_CORPUS_DIR) + "/positive")) {
    const auto rep = run_command(parse_problem_file(entry.path().string()), command("validate"));
    EXPECT_EQ(rep.exit_code, exit_ok) << entry.path() << "\n" << render_text(rep);
  }
}

TEST(Problem, NegativeCorpusIsRejected) {
  for (const auto& entry : fs::directory_iterator(std::string(LRC_CORPUS_DIR) + "/negative")) {
    int code = exit_ok;
    try {
      code = run_command(parse_problem_file(entry.path().string()), command("validate")).exit_code;
    } catch (const ParseError&) {
      code = exit_input_error;
    }
    EXPECT_NE(code, exit_ok) << entry.path();
  }
}

TEST(Report, CohomologyAndOverrides) {
  const auto p = parse_problem_json(aff1_text);
  const auto rep = run_command(p, command("cohomology"));
  EXPECT_EQ(rep.exit_code, exit_ok);
  EXPECT_EQ(rep.body["cohomology"]["dims"], Json::array({1, 1, 0}));
  EXPECT_EQ(rep.body["field"], "Q");
  auto o = command("cohomology");
  o.field = FieldSpec::parse("F_2");
  EXPECT_EQ(run_command(p, o).body["cohomology"]["dims"], Json::array({1, 1, 0}));
  const auto s = parse_problem_file(corpus("positive", "sl2.json"));
  EXPECT_EQ(run_command(s, command("cohomology")).body["cohomology"]["dims"], Json::array({1, 0, 0, 1}));
  const auto r2 = run_command(s, o);
  EXPECT_EQ(r2.body["field"], "F_2");
  EXPECT_EQ(r2.body["cohomology"]["dims"], Json::array({1, 2, 2, 1}));
}

TEST(Report, InputErrors) {
  const auto p = parse_problem_file(corpus("positive", "sl2.json"));
  EXPECT_EQ(run_command(p, command("hs")).exit_code, exit_input_error);
  EXPECT_EQ(run_command(p, command("total")).exit_code, exit_input_error);
  EXPECT_EQ(run_command(p, command("frobnicate")).exit_code, exit_input_error);
  auto o = command("env");
  o.degree = 0;
  EXPECT_EQ(run_command(p, o).exit_code, exit_input_error);
}

TEST(Report, FailuresExitOne) {
  const auto p = parse_problem_file(corpus("negative", "jacobi_flip.json"));
  const auto rep = run_command(p, command("cohomology"));
  EXPECT_EQ(rep.exit_code, exit_failure);
  EXPECT_EQ(rep.body["status"], "fail");
  EXPECT_FALSE(rep.body.contains("cohomology"));
}

TEST(Report, CommandsOnCorpus) {
  const auto run = [](const std::string& file, const std::string& c) {
    return run_command(parse_problem_file(corpus("positive", file)), command(c));
  };
  const auto hs = run("heisenberg.json", "hs");
  EXPECT_EQ(hs.exit_code, exit_ok) << render_text(hs);
  EXPECT_EQ(hs.body["hs"]["cohomology"], Json::array({1, 2, 2, 1}));
  const auto env = run("fat_point_1.json", "env");
  EXPECT_EQ(env.exit_code, exit_ok) << render_text(env);
  EXPECT_EQ(env.body["env"]["pbw"]["dim"], 8);
  const auto inv = run("fat_point_1.json", "invariants");
  EXPECT_EQ(inv.body["invariants"]["dim"], 1);
  EXPECT_TRUE(inv.body["invariants"]["equals_h0"].get<bool>());
  const auto tot = run("aff1_cone.json", "total");
  EXPECT_EQ(tot.exit_code, exit_ok);
  EXPECT_EQ(tot.body["total"]["dims"], Json::array({0, 0, 0, 0}));
}

TEST(Report, RenderingsAreDeterministic) {
  const auto p = parse_problem_file(corpus("positive", "aff1.json"));
  const auto a = run_command(p, command("hs")), b = run_command(p, command("hs"));
  EXPECT_EQ(render_json(a), render_json(b));
  EXPECT_EQ(render_text(a), render_text(b));
  EXPECT_NE(render_text(a).find("status: ok"), std::string::npos);
}
