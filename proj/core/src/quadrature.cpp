#include "sl3/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace sl3 {

namespace {

// Gauss-Kronrod 7-15 abscissae and weights (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Integrand sample carrying the error of an inner integral, if any.
struct Sample {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 1;
  bool converged = true;
};

using SampledFunction = std::function<Sample(double)>;

struct Segment {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;       // GK estimate on this segment
  double propagated = 0.0;  // integrated inner errors
  int depth = 0;
  std::size_t order = 0;    // creation index, tie-breaker for determinism
};

struct SegmentOrder {
  bool operator()(const Segment& x, const Segment& y) const {
    const double ex = x.error + x.propagated;
    const double ey = y.error + y.propagated;
    if (ex != ey) return ex < ey;
    return x.order > y.order;
  }
};

struct RuleOutput {
  Segment segment;
  std::size_t evaluations = 0;
  bool inner_converged = true;
};

RuleOutput apply_gk15(const SampledFunction& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::abs(half);

  std::array<double, 15> fv{};
  std::array<double, 15> fe{};
  RuleOutput out;
  auto eval = [&](std::size_t slot, double x) {
    const Sample s = f(x);
    fv[slot] = s.value;
    fe[slot] = s.error;
    out.evaluations += s.evaluations;
    out.inner_converged = out.inner_converged && s.converged;
  };
  eval(0, center);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    eval(1 + 2 * j, center - dx);
    eval(2 + 2 * j, center + dx);
  }

  const double fc = fv[0];
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  double resabs = std::abs(resk);
  double prop = fe[0] * kWgk[7];
  for (std::size_t j = 0; j < 7; ++j) {
    const double f1 = fv[1 + 2 * j];
    const double f2 = fv[2 + 2 * j];
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    prop += kWgk[j] * (fe[1 + 2 * j] + fe[2 + 2 * j]);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (std::size_t j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv[1 + 2 * j] - reskh) + std::abs(fv[2 + 2 * j] - reskh));

  const double result = resk * half;
  resabs *= abs_half;
  resasc *= abs_half;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
    err = std::max(50.0 * kEps * resabs, err);

  out.segment.a = a;
  out.segment.b = b;
  out.segment.value = result;
  out.segment.error = err;
  out.segment.propagated = prop * abs_half;
  return out;
}

struct AdaptiveControls {
  double rel_tol;
  double abs_tol;
  int max_depth;
};

constexpr std::size_t kMaxSegments = 20000;

Sample adaptive(const SampledFunction& f, double a, double b, const AdaptiveControls& c) {
  Sample result;
  result.evaluations = 0;
  if (!(b > a)) return result;

  std::vector<Segment> segments;
  std::vector<char> alive;
  auto by_error = [&segments](std::size_t x, std::size_t y) {
    return SegmentOrder{}(segments[x], segments[y]);
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_error)> queue(by_error);
  bool inner_ok = true;
  std::size_t evals = 0;
  double value = 0.0, err = 0.0, prop = 0.0;

  auto push = [&](double lo, double hi, int depth) {
    RuleOutput r = apply_gk15(f, lo, hi);
    r.segment.depth = depth;
    r.segment.order = segments.size();
    evals += r.evaluations;
    inner_ok = inner_ok && r.inner_converged;
    value += r.segment.value;
    err += r.segment.error;
    prop += r.segment.propagated;
    segments.push_back(r.segment);
    alive.push_back(1);
    queue.push(segments.size() - 1);
  };

  // Exact re-summation over live segments in creation order.
  auto resum = [&]() {
    value = err = prop = 0.0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
      if (!alive[i]) continue;
      value += segments[i].value;
      err += segments[i].error;
      prop += segments[i].propagated;
    }
  };

  push(a, b, 0);
  bool depth_ok = true;
  std::size_t iteration = 0;
  while (true) {
    if (++iteration % 32 == 0) resum();
    const double target = std::max(c.abs_tol, c.rel_tol * std::abs(value));
    if (err <= 0.5 * target || (prop == 0.0 && err <= target)) {
      resum();
      const double t2 = std::max(c.abs_tol, c.rel_tol * std::abs(value));
      if (err <= 0.5 * t2 || (prop == 0.0 && err <= t2)) break;
    }
    if (queue.size() >= kMaxSegments) {
      depth_ok = false;
      break;
    }
    const std::size_t worst = queue.top();
    if (segments[worst].depth >= c.max_depth) {
      depth_ok = false;
      break;
    }
    queue.pop();
    alive[worst] = 0;
    const Segment w = segments[worst];
    value -= w.value;
    err -= w.error;
    prop -= w.propagated;
    const double mid = 0.5 * (w.a + w.b);
    push(w.a, mid, w.depth + 1);
    push(mid, w.b, w.depth + 1);
  }

  resum();
  result.value = value;
  result.error = err + prop;
  result.evaluations = evals;
  result.converged = depth_ok && inner_ok;
  return result;
}

QuadratureResult to_result(const Sample& s) {
  return QuadratureResult{s.value, s.error, s.converged, s.evaluations};
}

std::string format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
  if (max_subdivision_depth < 1)
    throw std::invalid_argument("QuadratureSpec: max_subdivision_depth must be >= 1");
  for (const auto& iv : truncation_box)
    if (!(iv.hi >= iv.lo) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi))
      throw std::invalid_argument("QuadratureSpec: truncation box axes must be finite, lo <= hi");
}

std::string QuadratureSpec::to_config() const {
  std::ostringstream os;
  os << "rel_tol=" << format(rel_tol) << "\n";
  os << "abs_tol=" << format(abs_tol) << "\n";
  os << "max_subdivision_depth=" << max_subdivision_depth << "\n";
  for (std::size_t i = 0; i < truncation_box.size(); ++i)
    os << "box." << i << "=" << format(truncation_box[i].lo) << "," << format(truncation_box[i].hi)
       << "\n";
  return os.str();
}

QuadratureSpec QuadratureSpec::from_config(std::string_view text) {
  return from_config(text, QuadratureSpec{});
}

QuadratureSpec QuadratureSpec::from_config(std::string_view text, const QuadratureSpec& base_in) {
  QuadratureSpec base = base_in;
  std::istringstream in{std::string(text)};
  std::string line;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("QuadratureSpec: malformed line: " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "rel_tol") {
      base.rel_tol = std::stod(val);
    } else if (key == "abs_tol") {
      base.abs_tol = std::stod(val);
    } else if (key == "max_subdivision_depth") {
      base.max_subdivision_depth = std::stoi(val);
    } else if (key.rfind("box.", 0) == 0) {
      const std::size_t axis = std::stoul(key.substr(4));
      const auto comma = val.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("QuadratureSpec: box needs lo,hi");
      if (base.truncation_box.size() <= axis) base.truncation_box.resize(axis + 1);
      base.truncation_box[axis] = Interval{std::stod(val.substr(0, comma)), std::stod(val.substr(comma + 1))};
    } else {
      throw std::invalid_argument("QuadratureSpec: unknown key " + key);
    }
  }
  base.validate();
  return base;
}

QuadratureResult integrate_1d(const std::function<double(double)>& h, double a, double b,
                              const QuadratureSpec& spec) {
  spec.validate();
  const double sign = b >= a ? 1.0 : -1.0;
  const double lo = std::min(a, b), hi = std::max(a, b);
  const SampledFunction f = [&h](double x) { return Sample{h(x), 0.0, 1, true}; };
  Sample s = adaptive(f, lo, hi, {spec.rel_tol, spec.abs_tol, spec.max_subdivision_depth});
  s.value *= sign;
  return to_result(s);
}

QuadratureResult integrate_iterated(const Integrand& h, std::span<const LimitFunction> limits,
                                    const QuadratureSpec& spec) {
  spec.validate();
  const std::size_t dims = limits.size();
  if (dims < 1 || dims > 3) throw std::invalid_argument("integrate: dims must be 1..3");

  std::array<double, 3> point{};
  std::function<Sample(std::size_t, double, double)> level =
      [&](std::size_t d, double rel, double abs) -> Sample {
    const Interval iv = limits[d](std::span<const double>(point.data(), d));
    if (!(iv.hi > iv.lo)) return Sample{0.0, 0.0, 0, true};
    const double inner_abs = 0.5 * abs / std::max(1.0, iv.width());
    SampledFunction f;
    if (d + 1 == dims) {
      f = [&, d](double x) {
        point[d] = x;
        return Sample{h(std::span<const double>(point.data(), dims)), 0.0, 1, true};
      };
    } else {
      f = [&, d, rel, inner_abs](double x) {
        point[d] = x;
        return level(d + 1, 0.5 * rel, inner_abs);
      };
    }
    return adaptive(f, iv.lo, iv.hi, {rel, abs, spec.max_subdivision_depth});
  };
  return to_result(level(0, spec.rel_tol, spec.abs_tol));
}

QuadratureResult integrate(const Integrand& h, int dims, const QuadratureSpec& spec) {
  if (dims < 1 || dims > 3) throw std::invalid_argument("integrate: dims must be 1..3");
  if (spec.truncation_box.size() < static_cast<std::size_t>(dims))
    throw std::invalid_argument("integrate: truncation_box has fewer axes than dims");
  std::vector<LimitFunction> limits;
  for (int d = 0; d < dims; ++d) {
    const Interval iv = spec.truncation_box[d];
    limits.emplace_back([iv](std::span<const double>) { return iv; });
  }
  return integrate_iterated(h, limits, spec);
}

}  // namespace sl3
