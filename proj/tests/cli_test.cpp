#include "springer_kit/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "springer_kit/json_io.hpp"

namespace {

using namespace springer_kit;
using namespace springer_kit::cli;

struct Outcome {
  int status = -1;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Outcome o;
  o.status = main_entry(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::vector<Json> lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    out.push_back(Json::parse(line));
  return out;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(SPRINGER_KIT_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in) << name;
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Command parse(std::vector<std::string> args) { return parse_args(args); }

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    ::setenv(name, value, 1);
  }
  ~ScopedEnv() { ::unsetenv(name_); }

 private:
  const char* name_;
};

TEST(ParseArgs, Verbs) {
  const Command classes = parse({"classes", "--n", "3"});
  EXPECT_EQ(classes.verb, Verb::Classes);
  EXPECT_EQ(classes.n, 3);
  EXPECT_EQ(classes.format, OutputFormat::Json);

  const Command verify = parse({"verify", "--max-n", "60"});
  EXPECT_EQ(verify.verb, Verb::Verify);
  EXPECT_EQ(verify.max_n, 60);

  const Command springer = parse({"springer", "[[3,1],[2]]"});
  EXPECT_EQ(springer.verb, Verb::Springer);
  ASSERT_TRUE(springer.bipartition.has_value());
  EXPECT_EQ(to_string(*springer.bipartition), "[[3,1],[2]]");

  const Command cuspidal = parse({"cuspidal", "--e", "1", "--f", "2"});
  EXPECT_EQ(cuspidal.verb, Verb::Cuspidal);
  EXPECT_EQ(cuspidal.e, 1);
  EXPECT_EQ(cuspidal.f, 2);

  EXPECT_EQ(parse({"series", "--n", "2"}).verb, Verb::Series);
  const Command levi = parse({"levi", "--n", "6", "--e", "1"});
  EXPECT_EQ(levi.verb, Verb::Levi);
  EXPECT_EQ(levi.e, 1);
}

TEST(ParseArgs, FormatFlagInEitherPosition) {
  EXPECT_EQ(parse({"--format", "table", "classes", "--n", "1"}).format,
            OutputFormat::Table);
  EXPECT_EQ(parse({"classes", "--n", "1", "--format", "table"}).format,
            OutputFormat::Table);
}

TEST(ParseArgs, Help) {
  const Command help = parse({"--help"});
  EXPECT_EQ(help.verb, Verb::Help);
  EXPECT_NE(help.usage.find("classes"), std::string::npos);
  EXPECT_NE(help.usage.find("verify"), std::string::npos);
}

TEST(ParseArgs, UsageErrorsNameTheProblem) {
  auto message = [](std::vector<std::string> args) -> std::string {
    try {
      parse_args(args);
    } catch (const UsageError& err) {
      return err.what();
    }
    return "";
  };
  EXPECT_NE(message({"verify", "--max-n", "-1"}).find("--max-n"),
            std::string::npos);
  EXPECT_NE(message({"classes", "--n", "x"}).find("--n"), std::string::npos);
  EXPECT_FALSE(message({"bogus"}).empty());
  EXPECT_FALSE(message({}).empty());
  EXPECT_FALSE(message({"classes"}).empty());
  EXPECT_FALSE(message({"--format", "xml", "classes", "--n", "1"}).empty());
  EXPECT_NE(message({"springer", "[[1,2],[]]"}).find("bipartition"),
            std::string::npos);
  EXPECT_NE(message({"springer", "[[1]"}).find("bipartition"),
            std::string::npos);
}

TEST(Run, ClassesEmitsOneRecordPerClass) {
  const Outcome o = invoke({"classes", "--n", "2"});
  EXPECT_EQ(o.status, kExitOk);
  EXPECT_TRUE(o.err.empty());
  const auto records = lines(o.out);
  ASSERT_EQ(records.size(), 4u);
  for (const auto& r : records) {
    EXPECT_EQ(r["schema_version"], kSchemaVersion);
    EXPECT_EQ(r["kind"], "class");
    EXPECT_NO_THROW(class_from_record(r));
  }
  EXPECT_EQ(records[1]["partition"].dump(), "[2,2]");
  EXPECT_EQ(records[1]["component_group_order"], 2);
}

TEST(Run, Springer) {
  const Outcome o = invoke({"springer", "[[1],[1]]"});
  EXPECT_EQ(o.status, kExitOk);
  const auto records = lines(o.out);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0]["display"], "[0,3;2]");
  EXPECT_EQ(records[0]["wavefront"].dump(), "[2,2]");

  const auto single = lines(invoke({"springer", "[[1],[]]"}).out);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0]["display"], "[1;∅]");
  EXPECT_EQ(single[0]["wavefront"].dump(), "[2]");
}

TEST(Run, VerifyAndCuspidal) {
  const Outcome sweep60 = invoke({"verify", "--max-n", "60"});
  EXPECT_EQ(sweep60.status, kExitOk);
  const auto records = lines(sweep60.out);
  EXPECT_FALSE(records.empty());
  for (const auto& r : records) {
    EXPECT_TRUE(r["identity_holds"].get<bool>());
    EXPECT_EQ(r["a_order"], r["n_chi"]);
  }

  const Outcome one = invoke({"cuspidal", "--e", "1", "--f", "2"});
  EXPECT_EQ(one.status, kExitOk);
  const auto single = lines(one.out);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0]["lambda"].dump(), "[6,4,2]");
  EXPECT_EQ(single[0]["n_chi"], 4);
}

TEST(Run, TableFormat) {
  const Outcome o = invoke({"--format", "table", "classes", "--n", "2"});
  EXPECT_EQ(o.status, kExitOk);
  std::istringstream in(o.out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("n  partition", 0), 0u);
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 4);
}

TEST(Run, ErrorsAreJsonOnStderr) {
  const Outcome usage = invoke({"verify", "--max-n", "-1"});
  EXPECT_EQ(usage.status, kExitUsage);
  EXPECT_TRUE(usage.out.empty());
  const auto err = lines(usage.err);
  ASSERT_EQ(err.size(), 1u);
  EXPECT_EQ(err[0]["kind"], "error");
  EXPECT_EQ(err[0]["error"], "UsageError");

  const Outcome rank = invoke({"levi", "--n", "5", "--e", "2"});
  EXPECT_EQ(rank.status, kExitUsage);
  EXPECT_EQ(lines(rank.err)[0]["error"], "RankExceeded");

  const Outcome bound = invoke({"classes", "--n", "31"});
  EXPECT_EQ(bound.status, kExitUsage);
  EXPECT_EQ(lines(bound.err)[0]["error"], "BoundExceeded");
}

TEST(Run, RankBoundFromEnvironment) {
  {
    const ScopedEnv env("SPRINGER_KIT_MAX_RANK", "3");
    EXPECT_EQ(invoke({"classes", "--n", "3"}).status, kExitOk);
    const Outcome o = invoke({"classes", "--n", "4"});
    EXPECT_EQ(o.status, kExitUsage);
    EXPECT_EQ(lines(o.err)[0]["error"], "BoundExceeded");
    EXPECT_EQ(invoke({"verify", "--max-n", "4"}).status, kExitUsage);
  }
  {
    const ScopedEnv env("SPRINGER_KIT_MAX_RANK", "-5");
    const Outcome o = invoke({"classes", "--n", "1"});
    EXPECT_EQ(o.status, kExitUsage);
    EXPECT_NE(lines(o.err)[0]["message"].get<std::string>().find(
                  "SPRINGER_KIT_MAX_RANK"),
              std::string::npos);
  }
  {
    const ScopedEnv env("SPRINGER_KIT_MAX_RANK", "40");
    EXPECT_EQ(invoke({"classes", "--n", "31"}).status, kExitOk);
  }
}

TEST(Run, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"classes", "--n", "6"},
           {"verify", "--max-n", "30"},
           {"series", "--n", "3"},
           {"--format", "table", "verify", "--max-n", "12"}}) {
    EXPECT_EQ(invoke(args).out, invoke(args).out);
  }
}

TEST(Golden, MatchesCheckedInOutput) {
  EXPECT_EQ(invoke({"classes", "--n", "2"}).out, golden("classes_n2.jsonl"));
  EXPECT_EQ(invoke({"springer", "[[1],[1]]"}).out,
            golden("springer_1_1.jsonl"));
  EXPECT_EQ(invoke({"verify", "--max-n", "12"}).out,
            golden("verify_max_n12.jsonl"));
}

}  // namespace
