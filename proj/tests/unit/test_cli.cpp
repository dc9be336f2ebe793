#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "bergkern/cli.hpp"

using namespace bergkern;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bergkern");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

cplx parse_pair(const std::string& text) {
  std::istringstream in(text);
  double re = NAN, im = NAN;
  in >> re >> im;
  return {re, im};
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("bergkern_test_" + name); }

fs::path write_hardy(const std::string& name, std::size_t n, const std::function<cplx(double)>& f) {
  const fs::path p = temp_file(name);
  std::ofstream o(p);
  o.precision(17);
  o << "t,re_f,im_f\n";
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2 * kPi * static_cast<double>(k) / static_cast<double>(n);
    o << t << ',' << f(t).real() << ',' << f(t).imag() << '\n';
  }
  return p;
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> r;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) r.push_back(std::stod(cell));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST_CASE("number formatting and parsing") {
  CHECK(cli::format_number(1.0 / kPi) == "0.3183098861837907");
  CHECK(cli::format_number(-0.0) == "0");
  CHECK(cli::format_number(2.0) == "2");
  CHECK(cli::parse_point("0.3,-0.1")[0] == cplx(0.3, -0.1));
  const ComplexPoint b = cli::parse_point("0.1,0,0,0.2");
  CHECK(b.dim() == 2u);
  CHECK(b[1] == cplx(0.0, 0.2));
  CHECK_THROWS_AS(cli::parse_point("1,2,3"), cli::InputFormatError);
  CHECK_THROWS_AS(cli::parse_point("1,x"), cli::InputFormatError);
  CHECK(cli::parse_list("0.5,0.25,1e-3") == std::vector<double>{0.5, 0.25, 1e-3});
  CHECK_THROWS_AS(cli::parse_list(""), cli::InputFormatError);
}

TEST_CASE("eval examples") {
  Run r = run({"eval", "--kernel", "bergman-disc", "--z", "0,0", "--w", "0,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "0.3183098861837907 0\n");
  r = run({"eval", "--kernel", "szego-disc", "--z", "0,0", "--w", "1,0"});
  CHECK(r.out == "0.15915494309189535 0\n");
  r = run({"eval", "--kernel", "bergman-quarterplane", "--z", "1,1", "--w", "1,1"});
  CHECK(r.out == "0.15915494309189535 0\n");
  r = run({"eval", "--kernel", "bergman-ball2", "--z", "0,0,0,0", "--w", "0,0,0,0"});
  CHECK(parse_pair(r.out).real() == doctest::Approx(2.0 / (kPi * kPi)).epsilon(1e-15));
}

TEST_CASE("exit codes") {
  CHECK(run({"eval", "--kernel", "bergman-disc", "--z", "1.5,0", "--w", "0,0"}).code == cli::kDomain);
  CHECK(run({"eval", "--kernel", "szego-disc", "--z", "0.99999999999999,0", "--w", "1,0"}).code == cli::kPole);
  CHECK(run({"eval", "--kernel", "bergman-sphere", "--z", "0,0", "--w", "0,0"}).code == cli::kInputFormat);
  CHECK(run({"eval", "--kernel", "bergman-disc", "--z", "0,0,0", "--w", "0,0"}).code == cli::kInputFormat);
  CHECK(run({"eval", "--kernel", "bergman-disc"}).code == cli::kInputFormat);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"verify", "--suite", "sphere"}).code == cli::kInputFormat);
  const Run d = run({"eval", "--kernel", "bergman-disc", "--z", "1.5,0", "--w", "0,0"});
  CHECK_FALSE(d.err.empty());
}

TEST_CASE("grid csv") {
  const Run r = run({"grid", "--kernel", "bergman-disc", "--diagonal", "--n", "64", "--box", "-0.95,0.95,-0.95,0.95"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("re_z,im_z,re_k,im_k,abs_k\n", 0) == 0);
  const auto rows = csv_rows(r.out);
  CHECK(rows.size() <= 4096u);
  CHECK(rows.size() > 3000u);
  for (const auto& row : rows) {
    REQUIRE(row.size() == 5u);
    CHECK(row[4] > 0.0);
  }
}

TEST_CASE("grid values increase along radii toward the boundary") {
  const Run r = run({"grid", "--kernel", "bergman-disc", "--diagonal", "--n", "65", "--box", "-0.95,0.95,-0.95,0.95"});
  REQUIRE(r.code == 0);
  // 8 lattice rays from the centre: axes and diagonals
  std::map<int, std::vector<std::pair<double, double>>> rays;
  for (const auto& row : csv_rows(r.out)) {
    const double x = row[0], y = row[1];
    const bool axis = std::abs(x) < 1e-12 || std::abs(y) < 1e-12;
    const bool diag = std::abs(std::abs(x) - std::abs(y)) < 1e-12;
    if (!(axis || diag) || std::hypot(x, y) < 1e-12) continue;
    const int dir = static_cast<int>(std::lround(std::atan2(y, x) / (kPi / 4))) & 7;
    rays[dir].emplace_back(std::hypot(x, y), row[4]);
  }
  CHECK(rays.size() == 8u);
  for (auto& [dir, pts] : rays) {
    std::sort(pts.begin(), pts.end());
    CHECK(pts.size() >= 10u);
    for (std::size_t k = 1; k < pts.size(); ++k) CHECK(pts[k].second > pts[k - 1].second);
  }
}

TEST_CASE("grid pgm") {
  const fs::path p = temp_file("grid.pgm");
  const Run r = run({"grid", "--kernel", "bergman-disc", "--diagonal", "--n", "64", "--format", "pgm", "--out",
                     p.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(p);
  std::string magic;
  int w = 0, h = 0, maxv = 0;
  in >> magic >> w >> h >> maxv;
  CHECK(magic == "P2");
  CHECK(w == 64);
  CHECK(h == 64);
  CHECK(maxv == 255);
  int v = 0, count = 0, top = 0;
  while (in >> v) {
    CHECK(v >= 0);
    CHECK(v <= 255);
    top = std::max(top, v);
    ++count;
  }
  CHECK(count == 64 * 64);
  CHECK(top == 255);

  const Run again = run({"grid", "--kernel", "bergman-disc", "--diagonal", "--n", "64", "--format", "pgm"});
  std::ifstream whole(p);
  std::stringstream buf;
  buf << whole.rdbuf();
  CHECK(buf.str() == again.out);
  fs::remove(p);

  CHECK(run({"grid", "--kernel", "bergman-disc", "--diagonal", "--out", "/nonexistent-dir/x.csv"}).code == cli::kIo);
  CHECK(run({"grid", "--kernel", "bergman-disc", "--diagonal", "--format", "png"}).code == cli::kInputFormat);
  CHECK(run({"grid", "--kernel", "bergman-disc", "--diagonal", "--n", "1"}).code == cli::kInputFormat);
}

TEST_CASE("verify command") {
  const Run d = run({"verify", "--suite", "disc"});
  CHECK(d.out.find("series-vs-closed-form N=200 ≤ 1e-12: PASS") != std::string::npos);
  const Run a = run({"verify", "--suite", "annulus"});
  CHECK(a.code == 0);
  CHECK(a.out.find("suite annulus: PASS") != std::string::npos);
  const Run b = run({"verify", "--suite", "ball"});
  CHECK(b.out.find("LP-annihilation rel ≤ 1e-3: PASS") != std::string::npos);
}

TEST_CASE("project hardy") {
  const fs::path m = write_hardy("conj.csv", 256, [](double t) { return std::polar(1.0, -t); });
  Run r = run({"project", "--space", "hardy", "--input", m.string(), "--z", "0.3,0"});
  REQUIRE(r.code == 0);
  CHECK(std::abs(parse_pair(r.out)) <= 1e-10);

  const fs::path one = write_hardy("one.csv", 256, [](double) { return cplx(1.0); });
  r = run({"project", "--space", "hardy", "--input", one.string(), "--z", "0.5,0"});
  CHECK(std::abs(parse_pair(r.out) - 1.0) <= 1e-10);

  const fs::path id = write_hardy("id.csv", 256, [](double t) { return std::polar(1.0, t); });
  r = run({"project", "--space", "hardy", "--input", id.string(), "--z", "0.2,-0.4"});
  CHECK(std::abs(parse_pair(r.out) - cplx(0.2, -0.4)) <= 1e-10);

  const fs::path bad = temp_file("bad.csv");
  {
    std::ofstream o(bad);
    o << "t,re_f,im_f\n0,1,0\n0.1,1,0\n0.5,1,0\n0.6,1,0\n";
  }
  CHECK(run({"project", "--space", "hardy", "--input", bad.string(), "--z", "0.1,0"}).code == cli::kInputFormat);
  CHECK(run({"project", "--space", "hardy", "--input", "/nonexistent-dir/x.csv", "--z", "0,0"}).code == cli::kIo);
  CHECK(run({"project", "--space", "hardy", "--input", one.string(), "--z", "1.5,0"}).code == cli::kDomain);
  for (const fs::path& p : {m, one, id, bad}) fs::remove(p);
}

TEST_CASE("project bergman") {
  const Run nodes = run({"project", "--space", "bergman", "--print-nodes"});
  REQUIRE(nodes.code == 0);
  const auto pts = csv_rows(nodes.out);
  CHECK(pts.size() == 32u * 128u);
  const fs::path p = temp_file("bergman.csv");
  {
    std::ofstream o(p);
    o.precision(17);
    o << "re_z,im_z,re_f,im_f\n";
    for (const auto& row : pts) {
      const cplx z(row[0], row[1]);
      const cplx f = z * z * z + 2.0 * z;
      o << row[0] << ',' << row[1] << ',' << f.real() << ',' << f.imag() << '\n';
    }
  }
  const Run r = run({"project", "--space", "bergman", "--input", p.string(), "--z", "0.3,0.2"});
  REQUIRE(r.code == 0);
  const cplx z(0.3, 0.2);
  CHECK(std::abs(parse_pair(r.out) - (z * z * z + 2.0 * z)) <= 1e-8);
  CHECK(run({"project", "--space", "bergman", "--input", p.string(), "--z", "0.3,0.2", "--nt", "64"}).code ==
        cli::kInputFormat);
  fs::remove(p);
}

TEST_CASE("blowup command") {
  auto exponent = [](const std::string& out) {
    std::istringstream in(out);
    std::string word;
    double e = NAN;
    in >> word >> e;
    CHECK(word == "exponent");
    return e;
  };
  Run r = run({"blowup", "--kernel", "bergman-disc", "--path", "radial"});
  REQUIRE(r.code == 0);
  CHECK(std::abs(exponent(r.out) - 2.0) <= 0.02);
  CHECK(r.out.find("\nconstant ") != std::string::npos);
  r = run({"blowup", "--kernel", "bergman-halfplane", "--path", "vertical"});
  CHECK(std::abs(exponent(r.out) - 2.0) <= 0.02);
  r = run({"blowup", "--kernel", "bergman-quarterplane", "--path", "corner"});
  CHECK(exponent(r.out) == doctest::Approx(2.0).epsilon(1e-12));
  r = run({"blowup", "--kernel", "bergman-annulus-approx", "--path", "radial"});
  CHECK(std::abs(exponent(r.out) - 2.0) <= 0.02);
  CHECK(run({"blowup", "--kernel", "bergman-disc", "--path", "corner"}).code == cli::kDomain);
  CHECK(run({"blowup", "--kernel", "bergman-disc", "--path", "radial", "--deltas", "0.1,0.2"}).code ==
        cli::kInputFormat);
}
