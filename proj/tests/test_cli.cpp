// End-to-end tests of the command line tool: pinned outputs, exit
// codes, output determinism, and JSON schema conformance.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <regex>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s)
    q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

RunResult run_cli(const std::vector<std::string>& args) {
  std::string cmd = shell_quote(GRAPHK_CLI_PATH);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

// Minimal JSON-Schema checker covering the subset the shipped schemas
// use: type, required, properties, additionalProperties, items, enum,
// pattern, minimum, minItems, maxItems and same-directory $ref.
bool validates(const json& schema, const json& value, std::string schema_dir);

bool type_matches(const std::string& t, const json& v) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "null") return v.is_null();
  return false;
}

bool validates(const json& schema, const json& value, std::string schema_dir) {
  if (schema.contains("$ref")) {
    std::ifstream in(schema_dir + "/" + schema["$ref"].get<std::string>());
    if (!in) return false;
    json sub = json::parse(in);
    return validates(sub, value, schema_dir);
  }
  if (schema.contains("enum")) {
    bool any = false;
    for (const auto& e : schema["enum"])
      if (e == value) any = true;
    if (!any) return false;
  }
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(t.get<std::string>(), value);
    } else {
      for (const auto& alt : t)
        if (type_matches(alt.get<std::string>(), value)) ok = true;
    }
    if (!ok) return false;
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& k : schema["required"])
        if (!value.contains(k.get<std::string>())) return false;
    const json props =
        schema.contains("properties") ? schema["properties"] : json::object();
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (props.contains(it.key())) {
        if (!validates(props[it.key()], it.value(), schema_dir)) return false;
      } else if (schema.contains("additionalProperties")) {
        const auto& ap = schema["additionalProperties"];
        if (ap.is_boolean() && !ap.get<bool>()) return false;
        if (ap.is_object() && !validates(ap, it.value(), schema_dir)) return false;
      }
    }
  }
  if (value.is_array()) {
    if (schema.contains("minItems") && value.size() < schema["minItems"].get<size_t>())
      return false;
    if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<size_t>())
      return false;
    if (schema.contains("items"))
      for (const auto& item : value)
        if (!validates(schema["items"], item, schema_dir)) return false;
  }
  if (value.is_string() && schema.contains("pattern")) {
    std::regex re(schema["pattern"].get<std::string>());
    if (!std::regex_search(value.get<std::string>(), re)) return false;
  }
  if (value.is_number() && schema.contains("minimum") &&
      value.get<double>() < schema["minimum"].get<double>())
    return false;
  return true;
}

bool check_schema(const std::string& name, const std::string& output) {
  std::string dir = GRAPHK_SCHEMA_DIR;
  std::ifstream in(dir + "/" + name);
  REQUIRE(in.good());
  json schema = json::parse(in);
  json value = json::parse(output);
  return validates(schema, value, dir);
}

const std::string kRose2 = R"({"vertices":["v"],"edges":[["e1","v","v"],["e2","v","v"]]})";
const std::string kRose3 =
    R"({"vertices":["v"],"edges":[["e1","v","v"],["e2","v","v"],["e3","v","v"]]})";
const std::string kTwoByTwo =
    R"({"vertices":["v","w"],"edges":[["a","v","v"],["b","v","v"],["c","v","w"],
        ["d","w","v"],["e","w","w"],["f","w","w"]]})";

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/graphk_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("cli: version and cite") {
  RunResult v = run_cli({"--version"});
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("graphk") != std::string::npos);

  RunResult c = run_cli({"--cite"});
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("[kp-class]") != std::string::npos);
  CHECK(c.out.find("[comp-finite-iso]") != std::string::npos);
}

TEST_CASE("cli: usage errors") {
  CHECK(run_cli({}).exit_code == 64);
  CHECK(run_cli({"no-such-command"}).exit_code == 64);
  CHECK(run_cli({"bf"}).exit_code == 64);  // missing argument
}

TEST_CASE("cli: data errors exit 65") {
  CHECK(run_cli({"bf", "/nonexistent/file.json"}).exit_code == 65);
  CHECK(run_cli({"bf", R"({"vertices":["v"],"edges":[]})"}).exit_code == 65);
  CHECK(run_cli({"bf", "{bad json"}).exit_code == 65);
  CHECK(run_cli({"element-nf", kRose2, "e1.e9^"}).exit_code == 65);
  CHECK(run_cli({"classify", R"({"vertices":["v"],"edges":[["e1","v","v"]]})", kRose2})
            .exit_code == 65);
}

TEST_CASE("cli: bf pinned output") {
  RunResult r = run_cli({"bf", kRose3});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "Z/2 (scale: generator)\n");

  RunResult j = run_cli({"--format", "json", "bf", kRose3});
  CHECK(j.exit_code == 0);
  CHECK(check_schema("bf.schema.json", j.out));
  json parsed = json::parse(j.out);
  CHECK(parsed["group"] == "Z/2");
  CHECK(parsed["scale"] == json::array({"1"}));
}

TEST_CASE("cli: bf-dual and ktheory") {
  CHECK(run_cli({"bf-dual", kRose3}).out == "Z/2\n");
  CHECK(check_schema("bf-dual.schema.json",
                     run_cli({"--format", "json", "bf-dual", kRose3}).out));

  RunResult top = run_cli({"ktheory", kTwoByTwo, "--flavor", "top"});
  CHECK(top.out == "K0 = Z (scale: 0)\nK1 = Z\n");
  RunResult alg = run_cli({"ktheory", kTwoByTwo, "--flavor", "alg"});
  CHECK(alg.out == "K0 = Z (scale: 0)\nK1 = (C*)^1 + Z\n");
  CHECK(check_schema("ktheory.schema.json",
                     run_cli({"--format", "json", "ktheory", kTwoByTwo,
                              "--flavor", "alg"})
                         .out));
}

TEST_CASE("cli: extension commands") {
  RunResult kk = run_cli({"--format", "json", "kk", kRose3, kRose3});
  CHECK(kk.exit_code == 0);
  CHECK(check_schema("extension.schema.json", kk.out));
  json parsed = json::parse(kk.out);
  CHECK(parsed["total"] == "Z/2");

  RunResult kkbig = run_cli({"--format", "json", "KK", kTwoByTwo, kTwoByTwo});
  CHECK(check_schema("extension.schema.json", kkbig.out));
  CHECK(json::parse(kkbig.out)["total"] == "Z^2");

  RunResult coeff = run_cli({"--format", "json", "kk-coeff", kRose3, "--g0",
                             "Z^2+Z/4", "--g1", "0"});
  CHECK(check_schema("extension.schema.json", coeff.out));
  // hom(Z/2, Z^2 + Z/4) = Z/2
  CHECK(json::parse(coeff.out)["total"] == "Z/2");
}

TEST_CASE("cli: comp-kernel and comp-iso") {
  CHECK(run_cli({"comp-kernel", kRose3, kTwoByTwo}).out == "0\n");
  RunResult ck = run_cli({"--format", "json", "comp-kernel", kTwoByTwo, kTwoByTwo});
  CHECK(check_schema("comp-kernel.schema.json", ck.out));
  CHECK(json::parse(ck.out)["kernel"] == "(C*)^1");

  RunResult iso = run_cli({"comp-iso", kRose3, kTwoByTwo});
  CHECK(iso.exit_code == 0);
  CHECK(iso.out.rfind("true\n", 0) == 0);
  RunResult niso = run_cli({"comp-iso", kTwoByTwo, kTwoByTwo});
  CHECK(niso.exit_code == 1);
  CHECK(niso.out.rfind("false\n", 0) == 0);
  CHECK(check_schema("comp-iso.schema.json",
                     run_cli({"--format", "json", "comp-iso", kRose3, kTwoByTwo}).out));
}

TEST_CASE("cli: spi exit codes and witnesses") {
  RunResult good = run_cli({"spi", kRose2});
  CHECK(good.exit_code == 0);
  CHECK(good.out.rfind("spi = true", 0) == 0);

  RunResult bad = run_cli({"spi", R"({"vertices":["v"],"edges":[["e1","v","v"]]})"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("witness (cycle without exit): e1") != std::string::npos);
  CHECK(check_schema("spi.schema.json",
                     run_cli({"--format", "json", "spi", kRose2}).out));
}

TEST_CASE("cli: classify exit codes") {
  std::string rose2file = write_temp("rose2.json", kRose2);
  RunResult spl = run_cli({"splice", rose2file, "v"});
  REQUIRE(spl.exit_code == 0);
  std::string splicefile = write_temp("rose2_splice.json", spl.out);

  RunResult iso = run_cli({"classify", rose2file, splicefile});
  CHECK(iso.exit_code == 0);
  CHECK(iso.out.rfind("Isomorphic", 0) == 0);

  RunResult niso = run_cli({"classify", kRose3, kRose2});
  CHECK(niso.exit_code == 1);
  CHECK(niso.out.rfind("NotIsomorphic", 0) == 0);

  // Scales differ and the torsion order exceeds the bound: Unknown, exit 2.
  std::string g5 =
      R"({"vertices":["v","w"],"edges":[["a","v","w"],["b","v","w"],
          ["c","w","v"],["d","w","v"],["e","w","w"],["f","w","w"]]})";
  std::string rose6 =
      R"({"vertices":["v"],"edges":[["e1","v","v"],["e2","v","v"],["e3","v","v"],
          ["e4","v","v"],["e5","v","v"],["e6","v","v"]]})";
  RunResult unk = run_cli({"classify", rose6, g5, "--bound", "1"});
  CHECK(unk.exit_code == 2);
  CHECK(unk.out.rfind("Unknown", 0) == 0);
  // With the default bound the search concludes.
  CHECK(run_cli({"classify", rose6, g5}).exit_code == 0);
  CHECK(run_cli({"classify", rose6, g5, "--bound", "bogus"}).exit_code == 65);

  CHECK(check_schema("classify.schema.json",
                     run_cli({"--format", "json", "classify", kRose3, kRose3}).out));
}

TEST_CASE("cli: lift-report") {
  RunResult r = run_cli({"lift-report", kRose3, kRose3});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("every class lifts uniquely = true") != std::string::npos);
  CHECK(check_schema("lift-report.schema.json",
                     run_cli({"--format", "json", "lift-report", kRose3, kRose3}).out));
}

TEST_CASE("cli: rose and splice emit valid graph files") {
  RunResult r = run_cli({"rose", "4"});
  CHECK(r.exit_code == 0);
  CHECK(check_schema("graph.schema.json", r.out));
  RunResult s = run_cli({"splice", kRose2, "v"});
  CHECK(check_schema("graph.schema.json", s.out));
  // Composability: splice output feeds other commands.
  RunResult bf = run_cli({"bf", s.out});
  CHECK(bf.out == "0 (scale: 0)\n");
}

TEST_CASE("cli: element-nf") {
  RunResult r = run_cli({"element-nf", kRose2, "e2.e2^"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "v - e1.e1^\n");
  CHECK(check_schema("element-nf.schema.json",
                     run_cli({"--format", "json", "element-nf", kRose2, "e2.e2^"}).out));
}

TEST_CASE("cli: verify-hom, duality-unitary, twist") {
  std::string good_map = R"({
    "source": )" + kRose2 + R"(,
    "target": )" + kRose2 + R"(,
    "vertex_images": {"v": "v"},
    "edge_images": {"e1": "e1", "e2": "e2"},
    "unital": true
  })";
  std::string map_file = write_temp("idmap.json", good_map);

  RunResult vh = run_cli({"verify-hom", map_file});
  CHECK(vh.exit_code == 0);
  CHECK(vh.out.rfind("verified", 0) == 0);
  CHECK(check_schema("verify-hom.schema.json",
                     run_cli({"--format", "json", "verify-hom", map_file}).out));

  std::string bad_map = R"({
    "source": )" + kRose2 + R"(,
    "target": )" + kRose2 + R"(,
    "vertex_images": {"v": "v"},
    "edge_images": {"e1": "e1", "e2": "e1"},
    "unital": true
  })";
  RunResult vbad = run_cli({"verify-hom", bad_map});
  CHECK(vbad.exit_code == 1);
  CHECK(vbad.out.rfind("failed", 0) == 0);

  RunResult du = run_cli({"duality-unitary", map_file});
  CHECK(du.exit_code == 0);
  CHECK(du.out.find("u = e1 (x) e1^ + e2 (x) e2^") != std::string::npos);
  CHECK(du.out.find("unitary = true") != std::string::npos);
  CHECK(check_schema("duality-unitary.schema.json",
                     run_cli({"--format", "json", "duality-unitary", map_file}).out));

  RunResult tw = run_cli({"twist", map_file, "e1.e2^ + e2.e1^"});
  CHECK(tw.exit_code == 0);
  CHECK(check_schema("generator-map.schema.json", tw.out));
  json twisted = json::parse(tw.out);
  CHECK(twisted["edge_images"]["e1"] == "e2");
  CHECK(twisted["edge_images"]["e2"] == "e1");

  CHECK(run_cli({"twist", map_file, "e1.e1^"}).exit_code == 65);
}

TEST_CASE("cli: identical invocations are byte-identical") {
  std::vector<std::vector<std::string>> invocations = {
      {"bf", kRose3},
      {"--format", "json", "kk", kTwoByTwo, kRose3},
      {"--format", "json", "spi", kTwoByTwo},
      {"classify", kRose3, kRose3},
      {"lift-report", kRose2, kRose3},
  };
  for (const auto& args : invocations) {
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}
