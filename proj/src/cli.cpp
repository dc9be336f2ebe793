#include "bergkern/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "bergkern/catalog.hpp"
#include "bergkern/errors.hpp"
#include "bergkern/projections.hpp"
#include "bergkern/verify.hpp"

namespace bergkern::cli {

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(start, end - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\r')) field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || res.ec != std::errc() || res.ptr != field.data() + field.size() || !std::isfinite(v)) {
      throw InputFormatError("not a number: '" + std::string(field) + "'");
    }
    values.push_back(v);
    start = end + 1;
  }
  return values;
}

ComplexPoint parse_point(std::string_view text) {
  const std::vector<double> v = parse_list(text);
  if (v.size() == 2) return ComplexPoint(cplx(v[0], v[1]));
  if (v.size() == 4) return ComplexPoint(cplx(v[0], v[1]), cplx(v[2], v[3]));
  throw InputFormatError("a point needs 2 (re,im) or 4 (re1,im1,re2,im2) numbers: '" + std::string(text) + "'");
}

namespace {

constexpr const char* kFooter =
    "Numbers print in shortest round-trip form (-0 prints as 0); complex values print as \"re im\".\n"
    "Exit codes: 0 success, 1 verification failure, 2 domain error, 3 pole, 4 I/O error, 5 input format.";

KernelId kernel_from(const std::string& text) {
  if (const auto id = parse_kernel_id(text)) return *id;
  std::string known;
  for (KernelId id : all_kernel_ids()) known += (known.empty() ? "" : ", ") + std::string(to_string(id));
  throw InputFormatError("unknown kernel '" + text + "' (known: " + known + ")");
}

ComplexPoint point_for(KernelId id, const std::string& text, const char* what) {
  const ComplexPoint p = parse_point(text);
  if (p.dim() != domain_of(id).dim()) {
    throw InputFormatError(std::string(what) + " has the wrong number of coordinates for " +
                           std::string(to_string(id)));
  }
  return p;
}

std::string complex_text(cplx v) { return format_number(v.real()) + " " + format_number(v.imag()); }

// Output stream that is either the caller's stdout or a file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(&out) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw IoError("cannot open '" + path + "' for writing");
      out_ = file_.get();
    }
  }
  std::ostream& stream() { return *out_; }
  void finish(const std::string& path) {
    out_->flush();
    if (!*out_) throw IoError("write to '" + path + "' failed");
  }

 private:
  std::ostream* out_;
  std::unique_ptr<std::ofstream> file_;
};

std::vector<std::vector<double>> read_csv(const std::string& path, std::size_t columns) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      const char c = line.front();
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.')) continue;  // header
    }
    std::vector<double> row = parse_list(line);
    if (row.size() != columns) {
      throw InputFormatError("expected " + std::to_string(columns) + " columns in '" + line + "'");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputFormatError("no data rows in '" + path + "'");
  return rows;
}

// ---- eval ----

struct EvalOptions {
  std::string kernel, z, w;
};

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  const KernelId id = kernel_from(o.kernel);
  const ComplexPoint z = point_for(id, o.z, "--z");
  const ComplexPoint w = point_for(id, o.w, "--w");
  out << complex_text(eval_closed_form(id, z, w)) << '\n';
  return kOk;
}

// ---- grid ----

struct GridOptions {
  std::string kernel, w, z2 = "0,0", box, format = "csv", out = "-";
  bool diagonal = false;
  std::size_t n = 64;
};

std::array<double, 4> default_box(Domain d) {
  switch (d.tag()) {
    case DomainTag::Disc:
    case DomainTag::Ball2: return {-1.0, 1.0, -1.0, 1.0};
    case DomainTag::Annulus: return {-2.0, 2.0, -2.0, 2.0};
    case DomainTag::HalfPlane: return {-2.0, 2.0, 0.0, 2.0};
    case DomainTag::QuarterPlane: return {0.0, 2.0, 0.0, 2.0};
  }
  return {-1.0, 1.0, -1.0, 1.0};
}

void require_second_argument(KernelId id, const ComplexPoint& w) {
  const Domain d = domain_of(id);
  switch (kind_of(id)) {
    case KernelKind::Bergman:
      if (!d.contains(w)) throw DomainError("--w lies outside the " + std::string(d.name()));
      break;
    case KernelKind::Szego:
      if (w.norm() > 1.0 + 1e-12) throw DomainError("--w lies outside the closed " + std::string(d.name()));
      break;
    case KernelKind::PoissonSzego:
      if (!d.on_boundary(w)) throw DomainError("--w is not on the boundary of the " + std::string(d.name()));
      break;
  }
}

int cmd_grid(const GridOptions& o, std::ostream& out) {
  const KernelId id = kernel_from(o.kernel);
  const Domain d = domain_of(id);
  if (o.format != "csv" && o.format != "pgm") throw InputFormatError("format must be csv or pgm");
  std::optional<ComplexPoint> w;
  if (o.diagonal) {
    if (kind_of(id) != KernelKind::Bergman) throw InputFormatError("--diagonal needs a bergman kernel");
  } else {
    if (o.w.empty()) throw InputFormatError("grid needs --w or --diagonal");
    w = point_for(id, o.w, "--w");
    require_second_argument(id, *w);
  }
  std::array<double, 4> box = default_box(d);
  if (!o.box.empty()) {
    const auto v = parse_list(o.box);
    if (v.size() != 4 || !(v[0] < v[1]) || !(v[2] < v[3])) {
      throw InputFormatError("--box needs xmin,xmax,ymin,ymax with xmin < xmax and ymin < ymax");
    }
    std::copy(v.begin(), v.end(), box.begin());
  }
  cplx z2 = 0.0;
  if (d.dim() == 2) {
    const ComplexPoint p = parse_point(o.z2);
    if (p.dim() != 1) throw InputFormatError("--z2 needs re,im");
    z2 = p[0];
  }

  const std::size_t n = o.n;
  struct Cell {
    cplx z;
    cplx k;
    bool ok = false;
  };
  std::vector<Cell> cells(n * n);
  for (std::size_t iy = 0; iy < n; ++iy) {
    const double y = box[2] + (box[3] - box[2]) * static_cast<double>(iy) / static_cast<double>(n - 1);
    for (std::size_t ix = 0; ix < n; ++ix) {
      const double x = box[0] + (box[1] - box[0]) * static_cast<double>(ix) / static_cast<double>(n - 1);
      Cell& c = cells[iy * n + ix];
      c.z = cplx(x, y);
      const ComplexPoint z = d.dim() == 1 ? ComplexPoint(c.z) : ComplexPoint(c.z, z2);
      if (!d.contains(z)) continue;
      try {
        c.k = eval_closed_form(id, z, o.diagonal ? z : *w);
        c.ok = std::isfinite(c.k.real()) && std::isfinite(c.k.imag());
      } catch (const PoleError&) {
      } catch (const DomainError&) {
      }
    }
  }

  Sink sink(o.out, out);
  std::ostream& s = sink.stream();
  if (o.format == "csv") {
    s << "re_z,im_z,re_k,im_k,abs_k\n";
    for (const Cell& c : cells) {
      if (!c.ok) continue;
      s << format_number(c.z.real()) << ',' << format_number(c.z.imag()) << ',' << format_number(c.k.real()) << ','
        << format_number(c.k.imag()) << ',' << format_number(std::abs(c.k)) << '\n';
    }
  } else {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const Cell& c : cells) {
      if (!c.ok) continue;
      const double l = std::log10(std::abs(c.k));
      if (!std::isfinite(l)) continue;
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
    s << "P2\n" << n << ' ' << n << "\n255\n";
    for (std::size_t row = 0; row < n; ++row) {
      const std::size_t iy = n - 1 - row;  // top row is ymax
      for (std::size_t ix = 0; ix < n; ++ix) {
        const Cell& c = cells[iy * n + ix];
        long v = 0;
        if (c.ok && hi > lo) {
          const double l = std::log10(std::abs(c.k));
          if (std::isfinite(l)) v = std::lround(255.0 * std::clamp((l - lo) / (hi - lo), 0.0, 1.0));
        }
        s << (ix ? " " : "") << v;
      }
      s << '\n';
    }
  }
  sink.finish(o.out);
  return kOk;
}

// ---- verify ----

int cmd_verify(const std::string& suite, std::ostream& out) {
  std::vector<SuiteReport> reports;
  try {
    reports = run_suite(suite);
  } catch (const std::invalid_argument& e) {
    throw InputFormatError(e.what());
  }
  bool all = true;
  for (const SuiteReport& r : reports) {
    out << "suite " << r.suite << '\n';
    std::size_t passed = 0;
    for (const CheckResult& c : r.checks) {
      out << "  " << c.line() << '\n';
      passed += c.pass ? 1 : 0;
    }
    out << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << passed << '/' << r.checks.size()
        << " checks)\n";
    all = all && r.passed();
  }
  return all ? kOk : kCheckFailed;
}

// ---- project ----

struct ProjectOptions {
  std::string space, input, z;
  std::size_t nodes = 512, nr = 32, nt = 128;
  bool print_nodes = false;
};

// Trigonometric interpolant of uniform samples on [0, 2pi).
BoundaryFunction trig_interpolant(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  const double step = 2.0 * kPi / static_cast<double>(n);
  const double t0 = rows[0][0];
  if (!(t0 >= 0.0 && t0 < step)) throw InputFormatError("t must start in [0, 2pi/n)");
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(rows[k][0] - (t0 + step * static_cast<double>(k))) > 1e-9) {
      throw InputFormatError("t grid is not uniform over [0, 2pi) at row " + std::to_string(k));
    }
  }
  const long half = static_cast<long>(n / 2);
  std::vector<std::pair<long, cplx>> modes;
  for (long m = -half; m <= half; ++m) {
    cplx c = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double t = rows[k][0];
      c += cplx(rows[k][1], rows[k][2]) * std::polar(1.0, -static_cast<double>(m) * t);
    }
    c /= static_cast<double>(n);
    if (n % 2 == 0 && (m == -half || m == half)) c *= 0.5;  // split the Nyquist mode
    modes.emplace_back(m, c);
  }
  return {[modes](const ComplexPoint& zeta) {
            const double t = std::arg(zeta[0]);
            cplx s = 0.0;
            for (const auto& [m, c] : modes) s += c * std::polar(1.0, static_cast<double>(m) * t);
            return s;
          },
          "trigonometric interpolant of " + std::to_string(n) + " samples"};
}

int cmd_project(const ProjectOptions& o, std::ostream& out, std::ostream& err) {
  if (o.space != "hardy" && o.space != "bergman") throw InputFormatError("--space must be hardy or bergman");
  if (o.space == "bergman") {
    const QuadratureRule rule = make_area_quadrature(Domain::disc(), o.nr, o.nt);
    if (o.print_nodes) {
      out << "re_z,im_z\n";
      for (const ComplexPoint& p : rule.nodes) out << format_number(p[0].real()) << ',' << format_number(p[0].imag()) << '\n';
      return kOk;
    }
    if (o.input.empty() || o.z.empty()) throw InputFormatError("project needs --input and --z");
    const auto rows = read_csv(o.input, 4);
    if (rows.size() != rule.size()) {
      throw InputFormatError("expected " + std::to_string(rule.size()) + " rows (one per rule node), got " +
                             std::to_string(rows.size()));
    }
    std::vector<cplx> samples(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (std::abs(cplx(rows[k][0], rows[k][1]) - rule.nodes[k][0]) > 1e-9) {
        throw InputFormatError("row " + std::to_string(k) + " is not at rule node k (see --print-nodes)");
      }
      samples[k] = cplx(rows[k][2], rows[k][3]);
    }
    const ComplexPoint z = parse_point(o.z);
    const ProjectionResult r = bergman_project_samples(samples, z, rule);
    if (r.near_boundary) err << "warning: |z| > " << kNearBoundaryRadius << ", quadrature error grows near the circle\n";
    out << complex_text(r.value) << '\n';
    return kOk;
  }
  if (o.input.empty() || o.z.empty()) throw InputFormatError("project needs --input and --z");
  const auto rows = read_csv(o.input, 3);
  const BoundaryFunction f = trig_interpolant(rows);
  const ComplexPoint z = parse_point(o.z);
  const QuadratureRule rule = make_boundary_quadrature(Domain::disc(), std::max(o.nodes, 2 * rows.size()));
  const ProjectionResult r = szego_project(f, z, rule);
  if (r.near_boundary) err << "warning: |z| > " << kNearBoundaryRadius << ", quadrature error grows near the circle\n";
  out << complex_text(r.value) << '\n';
  return kOk;
}

// ---- blowup ----

struct BlowupOptions {
  std::string kernel, path, deltas;
  double x0 = 0.3, angle = 0.0;
};

int cmd_blowup(const BlowupOptions& o, std::ostream& out) {
  const KernelId id = kernel_from(o.kernel);
  const Domain d = domain_of(id);
  std::function<ComplexPoint(double)> path;
  if (o.path == "radial" && d == Domain::disc()) {
    path = [a = o.angle](double delta) { return ComplexPoint(std::polar(1.0 - delta, a)); };
  } else if (o.path == "radial" && d == Domain::annulus()) {
    path = [a = o.angle](double delta) { return ComplexPoint(std::polar(2.0 - delta, a)); };
  } else if (o.path == "vertical" && d == Domain::halfplane()) {
    path = [x0 = o.x0](double delta) { return ComplexPoint(x0, delta); };
  } else if (o.path == "corner" && d == Domain::quarterplane()) {
    path = [](double s) { return ComplexPoint(s / std::sqrt(2.0), s / std::sqrt(2.0)); };
  } else if (o.path != "radial" && o.path != "vertical" && o.path != "corner") {
    throw InputFormatError("--path must be radial, vertical or corner");
  } else {
    throw DomainError("path '" + o.path + "' is not defined for the " + std::string(d.name()));
  }
  const std::vector<double> deltas = o.deltas.empty() ? default_blowup_deltas() : parse_list(o.deltas);
  const BlowupReport r = blowup_probe(closed_form_kernel(id), path, deltas);
  out << "exponent " << format_number(r.fitted_exponent) << '\n';
  out << "constant " << format_number(r.fitted_constant) << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bergman, Szego and Poisson-Szego kernels on model domains", "bergkern"};
  app.footer(kFooter);
  app.require_subcommand(1);

  std::string ids;
  for (KernelId id : all_kernel_ids()) ids += (ids.empty() ? "" : ", ") + std::string(to_string(id));

  EvalOptions eval;
  auto* e = app.add_subcommand("eval", "Evaluate a closed-form kernel K(z, w)");
  e->add_option("--kernel", eval.kernel, "Kernel id: " + ids)->required();
  e->add_option("--z", eval.z, "First argument, re,im or re1,im1,re2,im2")->required();
  e->add_option("--w", eval.w, "Second argument")->required();

  GridOptions grid;
  auto* g = app.add_subcommand("grid", "Sample |K| over a box (csv or plain pgm)");
  g->add_option("--kernel", grid.kernel, "Kernel id")->required();
  g->add_option("--w", grid.w, "Fixed second argument");
  g->add_flag("--diagonal", grid.diagonal, "Evaluate K(z, z)");
  g->add_option("--n", grid.n, "Resolution per axis")->check(CLI::Range(2, 4096));
  g->add_option("--box", grid.box, "xmin,xmax,ymin,ymax (defaults cover the domain)");
  g->add_option("--z2", grid.z2, "Second coordinate for ball kernels, re,im");
  g->add_option("--format", grid.format, "csv or pgm");
  g->add_option("--out", grid.out, "Output path, - for stdout");

  std::string suite = "all";
  auto* v = app.add_subcommand("verify", "Run verification suites");
  v->add_option("--suite", suite, "disc, annulus, transport, projections, ball or all");

  ProjectOptions project;
  auto* p = app.add_subcommand("project", "Project sampled data onto H^2 (hardy) or A^2 (bergman) of the disc");
  p->add_option("--space", project.space, "hardy or bergman")->required();
  p->add_option("--input", project.input, "CSV: t,re_f,im_f (hardy) or re_z,im_z,re_f,im_f on rule nodes (bergman)");
  p->add_option("--z", project.z, "Evaluation point re,im");
  p->add_option("--nodes", project.nodes, "Circle nodes (hardy)");
  p->add_option("--nr", project.nr, "Radial nodes of the area rule (bergman)");
  p->add_option("--nt", project.nt, "Angular nodes of the area rule (bergman)");
  p->add_flag("--print-nodes", project.print_nodes, "Print the area-rule nodes in input order and exit");

  BlowupOptions blowup;
  auto* b = app.add_subcommand("blowup", "Fit the boundary blowup exponent of K(z, z)");
  b->add_option("--kernel", blowup.kernel, "Kernel id")->required();
  b->add_option("--path", blowup.path, "radial (disc, annulus), vertical (halfplane) or corner (quarterplane)")
      ->required();
  b->add_option("--deltas", blowup.deltas, "Comma-separated, strictly decreasing");
  b->add_option("--x0", blowup.x0, "Real part of the vertical path");
  b->add_option("--angle", blowup.angle, "Argument of the radial path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kInputFormat;
  }

  try {
    if (*e) return cmd_eval(eval, out);
    if (*g) return cmd_grid(grid, out);
    if (*v) return cmd_verify(suite, out);
    if (*p) return cmd_project(project, out, err);
    if (*b) return cmd_blowup(blowup, out);
  } catch (const PoleError& ex) {
    err << "pole: " << ex.what() << '\n';
    return kPole;
  } catch (const std::domain_error& ex) {
    err << "domain: " << ex.what() << '\n';
    return kDomain;
  } catch (const IoError& ex) {
    err << "io: " << ex.what() << '\n';
    return kIo;
  } catch (const InputFormatError& ex) {
    err << "input: " << ex.what() << '\n';
    return kInputFormat;
  } catch (const std::invalid_argument& ex) {
    err << "input: " << ex.what() << '\n';
    return kInputFormat;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kCheckFailed;
  }
  return kInputFormat;
}

}  // namespace bergkern::cli
