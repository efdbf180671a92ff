#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "cli.hpp"

namespace {
struct Run {
    int code;
    std::string out, err;
};
Run run(std::vector<const char*> args) {
    args.insert(args.begin(), "lrb");
    std::ostringstream o, e;
    int c = lrb::run_cli((int)args.size(), args.data(), o, e);
    return {c, o.str(), e.str()};
}
std::string temp_file(const std::string& name, const std::string& body) {
    std::string p = std::string(P_tmpdir) + "/lrb_test_" + name;
    std::ofstream(p) << body;
    return p;
}
}  // namespace

TEST_CASE("branch") {
    auto r = run({"branch", "--n", "8", "--lambda", "5,4,4,3,2,2", "--mu", "2,2,2,1,1", "--method", "all"});
    CHECK(r.code == 0);
    CHECK(r.out.find(R"("total":1)") != std::string::npos);
    CHECK(r.out.find(R"("agree":true)") != std::string::npos);
    auto t = run({"branch", "--n", "4", "--lambda", "", "--mu", ""});
    CHECK(t.code == 0);
    CHECK(t.out.find(R"("total":1)") != std::string::npos);
    auto s = run({"branch", "--n", "4", "--lambda", "1,1", "--mu", "", "--group", "Sp"});
    CHECK(s.code == 0);
    CHECK(s.out.find(R"("total":1)") != std::string::npos);
}

TEST_CASE("genexp") {
    auto r = run({"genexp", "--type", "B", "--rank", "2", "--mu", "1,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"coeffs\":{\"1\":1,\"3\":1}}\n");
    auto d = run({"genexp", "--type", "D", "--rank", "3", "--mu", "1,1", "--check-identity", "4"});
    CHECK(d.code == 0);
    CHECK(d.out.find(R"("equal":true)") != std::string::npos);
}

TEST_CASE("separate and flags from files") {
    auto el = temp_file("el.json",
                        R"({"n":8,"mu":[4,3,3,2],"components":[{"kind":"T","a":4,"left":[1,3,4,5],"right":[1,2]},)"
                        R"({"kind":"T","a":3,"left":[1,3,4],"right":[1,2]},{"kind":"T","a":3,"left":[1,5,6],"right":[1,4]},)"
                        R"({"kind":"T","a":2,"left":[1,2,3,5],"right":[1,2,3,4]}]})");
    auto r = run({"separate", "--input", el.c_str()});
    CHECK(r.code == 0);
    CHECK(r.out.find(R"("delta":[4,4,2,2])") != std::string::npos);
    CHECK(r.out.find(R"("rows":[[1,1,1,1],[3,3,5,5],[4,4,6],[5]])") != std::string::npos);
    auto tr = run({"separate", "--input", el.c_str(), "--trace"});
    CHECK(tr.code == 0);
    CHECK(tr.out.find(R"("before")") != std::string::npos);

    auto S = temp_file("S.json", R"({"outer":[5,3],"inner":[],"rows":[[1,3,3,3,5],[2,4,4]]})");
    auto f = run({"flags", "--n", "8", "--mu", "2,2,2,1,1", "--delta", "4,2,2,2,2", "--tableau", S.c_str(), "--side", "row"});
    CHECK(f.code == 0);
    CHECK(f.out == "{\"m\":[1,3,5,7,8],\"n\":[2,4,6],\"not_in_set\":false,\"verdict\":true}\n");
    std::remove(el.c_str());
    std::remove(S.c_str());
}

TEST_CASE("lr enumerate") {
    auto r = run({"lr", "enumerate", "--outer", "3,2,1", "--inner", "2,1", "--content", "2,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("filling") != std::string::npos);
    auto a = run({"lr", "enumerate", "--outer", "3,2,1", "--inner", "2,1", "--content", "2,1", "--kind", "anti"});
    CHECK(a.code == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({"branch", "--n", "4", "--lambda", "1,2", "--mu", ""}).code == 1);
    CHECK(run({"branch", "--n", "4", "--lambda", "x", "--mu", ""}).code == 1);
    CHECK(run({"branch", "--n", "4", "--lambda", "1"}).code == 1);
    CHECK(run({"branch", "--n", "2", "--lambda", "1,1,1", "--mu", ""}).code == 1);
    CHECK(run({"genexp", "--type", "D", "--rank", "1", "--mu", ""}).code == 1);
    CHECK(run({"separate", "--input", "/nonexistent/file.json"}).code == 1);
    CHECK(run({"nosuch"}).code == 1);
    CHECK(run({}).code == 1);
    auto bad = temp_file("bad.json", R"({"n":3)");
    CHECK(run({"separate", "--input", bad.c_str()}).code == 1);
    std::remove(bad.c_str());
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical invocations give identical output") {
    auto a = run({"branch", "--n", "6", "--lambda", "4,3,2,1", "--mu", "2,1", "--method", "all"});
    auto b = run({"branch", "--n", "6", "--lambda", "4,3,2,1", "--mu", "2,1", "--method", "all"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto v1 = run({"verify", "--suite", "genexp", "--budget", "120"});
    auto v2 = run({"verify", "--suite", "genexp", "--budget", "120"});
    CHECK(v1.code == 0);
    CHECK(v1.out == v2.out);
}
