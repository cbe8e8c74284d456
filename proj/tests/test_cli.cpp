#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

class Workspace {
public:
  Workspace() : dir_(fs::temp_directory_path() / ("s3cover_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }

  std::string write(const std::string &name, const std::string &text) const {
    auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::string read(const std::string &name) const {
    std::ifstream f(dir_ / name);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
  }

  std::string path(const std::string &name) const { return (dir_ / name).string(); }

  Run run(const std::string &args) const {
    auto out = dir_ / "stdout.txt";
    std::string cmd = std::string(S3COVER_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read("stdout.txt")};
  }

private:
  fs::path dir_;
};

const char *kSolution1 = R"({"a":1,"b":1,"c":1,"d":1,"e":-1,"f":3,"g":1,"h":-6})";
const char *kPerturbed = R"({"a":1,"b":1,"c":1,"d":1,"e":-1,"f":3,"g":1,"h":-5})";
const char *kZero = R"({"a":0,"b":0,"c":0,"d":0,"e":0,"f":0,"g":0,"h":0})";

} // namespace

TEST_CASE("check") {
  Workspace ws;
  auto ok = ws.run("check --params " + ws.write("p.json", kSolution1));
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"residuals\":[0,0,0]") != std::string::npos);
  auto bad = ws.run("check --params " + ws.write("q.json", kPerturbed));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("\"residuals\":[0,0,2]") != std::string::npos);
}

TEST_CASE("build then verify") {
  Workspace ws;
  auto zero = ws.write("zero.json", kZero);
  CHECK(ws.run("build --params " + zero + " --out " + ws.path("t.json")).code == 0);
  CHECK(ws.run("verify --table " + ws.path("t.json")).code == 0);

  auto perturbed = ws.write("q.json", kPerturbed);
  CHECK(ws.run("build --params " + perturbed + " --out " + ws.path("bad.json")).code == 0);
  auto v = ws.run("verify --table " + ws.path("bad.json"));
  CHECK(v.code == 1);
  CHECK(v.out.find("\"witness\"") != std::string::npos);
}

TEST_CASE("table files round trip bit-exactly") {
  Workspace ws;
  auto p = ws.write("p.json", kSolution1);
  CHECK(ws.run("build --params " + p + " --out " + ws.path("a.json")).code == 0);
  CHECK(ws.run("build --params " + p + " --out " + ws.path("b.json")).code == 0);
  CHECK(ws.read("a.json") == ws.read("b.json"));
  CHECK(ws.run("building-data --params " + p).code == 0);
  ws.write("bd.json", R"({"A":-1,"B":1,"C":1,"D":1,"E":1,"F":-1,"G":3,"h":-6})");
  auto r = ws.run("reconstruct --building-data " + ws.path("bd.json") + " --out " +
                  ws.path("r.json") + " --compare " + p);
  CHECK(r.code == 0);
  CHECK(ws.read("r.json") == ws.read("a.json"));
  auto mismatch = ws.run("reconstruct --building-data " + ws.path("bd.json") + " --compare " +
                         ws.write("q.json", kPerturbed));
  CHECK(mismatch.code == 1);
}

TEST_CASE("building data outside the kernel") {
  Workspace ws;
  CHECK(ws.run("building-data --params " + ws.write("q.json", kPerturbed)).code == 1);
}

TEST_CASE("basis change") {
  Workspace ws;
  auto p = ws.write("p.json", kSolution1);
  auto swap = ws.write("swap.json", R"({"u":1,"C":[[0,1],[1,0]]})");
  auto r = ws.run("basis-change --params " + p + " --change " + swap);
  CHECK(r.code == 0);
  CHECK(r.out.find("\"covariant\":true") != std::string::npos);
  auto singular = ws.write("sing.json", R"({"u":1,"C":[[1,2],[2,4]]})");
  CHECK(ws.run("basis-change --params " + p + " --change " + singular).code == 2);
}

TEST_CASE("ramification and search") {
  Workspace ws;
  auto p = ws.write("p.json", kSolution1);
  CHECK(ws.run("ramification --params " + p + " --nonzero --dedup --jobs 4 --out " +
               ws.path("m4.json"))
            .code == 0);
  CHECK(ws.run("ramification --params " + p + " --nonzero --dedup --out " + ws.path("m1.json"))
            .code == 0);
  CHECK(ws.read("m1.json") == ws.read("m4.json"));
  CHECK(ws.read("m1.json").find("[432,648,0,216,-864,-864]") != std::string::npos);

  auto s = ws.run("search --bound 3");
  CHECK(s.code == 0);
  CHECK(s.out.find(R"({"a":1,"b":1,"c":1,"d":1,"e":-2,"f":1,"g":0,"h":-3})") !=
        std::string::npos);
  CHECK(s.out.find("degenerate") == std::string::npos);
  auto d = ws.run("search --bound 1 --degenerate --jobs 2");
  CHECK(d.code == 0);
  CHECK(d.out.find("\"degenerate\":true") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
  Workspace ws;
  CHECK(ws.run("check --params " + ws.write("bad.json", "{not json")).code == 2);
  CHECK(ws.run("check --params " + ws.write("partial.json", R"({"a":1})")).code == 2);
  CHECK(ws.run("check --params " + ws.path("missing.json")).code == 2);
  CHECK(ws.run("verify --table " + ws.write("t.json", R"({"basis":[]})")).code == 2);
  CHECK(ws.run("search --bound 0").code == 2);
  CHECK(ws.run("frobnicate").code == 2);
  CHECK(ws.run("check").code == 2);
}

TEST_CASE("selftest and pretty output") {
  Workspace ws;
  auto r = ws.run("--pretty selftest");
  CHECK(r.code == 0);
  CHECK(r.out.find("\n  ") != std::string::npos);
}
