#include "icosa/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <fstream>
#include <memory>
#include <stdexcept>

#ifdef ICOSA_HAVE_PNG
#include <png.h>
#endif

#include "icosa/parallel.hpp"

namespace icosa {

void Viewport::validate() const {
  if (!(x0 < x1 && y0 < y1)) throw std::invalid_argument("viewport needs positive area");
}

Raster::Raster(int w, int h, Viewport v) : width(w), height(h), viewport(v) {
  if (w <= 0 || h <= 0) throw std::invalid_argument("raster dimensions must be positive");
  v.validate();
  pixels.assign(std::size_t(w) * h, RGB{});
}

Complex Raster::center(int col, int row) const {
  return {viewport.x0 + (col + 0.5) * (viewport.x1 - viewport.x0) / width,
          viewport.y1 - (row + 0.5) * (viewport.y1 - viewport.y0) / height};
}

std::optional<std::pair<int, int>> Raster::pixelOf(Complex z) const {
  const double fx = (z.real() - viewport.x0) / (viewport.x1 - viewport.x0) * width;
  const double fy = (viewport.y1 - z.imag()) / (viewport.y1 - viewport.y0) * height;
  if (!(fx >= 0 && fx < width && fy >= 0 && fy < height)) return std::nullopt;
  return std::pair{int(fx), int(fy)};
}

Palette Palette::newton() {
  Palette p;
  p.colors_ = {{220, 30, 30}, {30, 170, 30}, {40, 60, 220}, {128, 128, 0}, {143, 0, 255}};
  return p;
}

Palette Palette::cycles(int n) {
  Palette p;
  for (int i = 0; i < n; ++i) {
    const double h = 6.0 * i / n;
    const double s = i % 2 ? 0.55 : 0.9, v = i % 3 == 0 ? 0.75 : 0.95;
    const int sector = int(h) % 6;
    const double f = h - std::floor(h);
    const double a = v * (1 - s), b = v * (1 - s * f), c = v * (1 - s * (1 - f));
    double r, g, bl;
    switch (sector) {
      case 0: r = v, g = c, bl = a; break;
      case 1: r = b, g = v, bl = a; break;
      case 2: r = a, g = v, bl = c; break;
      case 3: r = a, g = b, bl = v; break;
      case 4: r = c, g = a, bl = v; break;
      default: r = v, g = a, bl = b; break;
    }
    p.colors_.push_back({std::uint8_t(std::lround(255 * r)), std::uint8_t(std::lround(255 * g)),
                         std::uint8_t(std::lround(255 * bl))});
  }
  return p;
}

int BasinImage::colorsPresent() const {
  return int(std::count_if(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; }));
}

BasinImage renderBasins(const MapDynamics& d, int width, int height, Viewport v, int threads,
                        const ConvergeOptions& o) {
  BasinImage b{Raster(width, height, v), {}, {}, std::vector<std::size_t>(d.cycles.size(), 0), 0};
  const std::size_t n = std::size_t(width) * height;
  b.cycle.assign(n, -1);
  b.iterations.assign(n, 0);
  parallelFor(n, threads, [&](std::size_t i) {
    const auto r = convergeToCycle(d, ProjectivePoint::affine(b.image.center(int(i % width), int(i / width))), o);
    b.cycle[i] = std::int16_t(r.cycle);
    b.iterations[i] = std::int16_t(r.iterations);
  });
  const Palette pal = Palette::cycles(int(d.cycles.size()));
  std::size_t none = 0;
  for (std::size_t i = 0; i < n; ++i) {
    b.image.pixels[i] = pal[b.cycle[i]];
    if (b.cycle[i] < 0)
      ++none;
    else
      ++b.counts[b.cycle[i]];
  }
  b.nonConverged = double(none) / double(n);
  return b;
}

namespace {

// True when the 3x3 block around the pixel is one basin.
bool interiorPixel(const BasinImage& b, int col, int row) {
  const int c = b.cycle[std::size_t(row) * b.image.width + col];
  for (int dr = -1; dr <= 1; ++dr)
    for (int dc = -1; dc <= 1; ++dc) {
      const int r = row + dr, k = col + dc;
      if (r < 0 || k < 0 || r >= b.image.height || k >= b.image.width) return false;
      if (b.cycle[std::size_t(r) * b.image.width + k] != c) return false;
    }
  return true;
}

}  // namespace

double klein4Score(const BasinImage& b, const MapDynamics& d, bool interiorOnly) {
  const IcosaGroup& G = icosaGroup();
  double worst = 1;
  for (int k : G.stabilizerOfRealAxis()) {
    std::vector<int> perm(d.cycles.size(), -1);
    for (std::size_t c = 0; c < d.cycles.size(); ++c) {
      const auto idx = d.critical.find(G.apply(k, d.cycles[c].p), 1e-8);
      if (idx) perm[c] = d.cycleOf[*idx];
    }
    std::size_t compared = 0, agree = 0;
    for (int row = 0; row < b.image.height; ++row)
      for (int col = 0; col < b.image.width; ++col) {
        const int c = b.cycle[std::size_t(row) * b.image.width + col];
        if (c < 0 || (interiorOnly && !interiorPixel(b, col, row))) continue;
        const ProjectivePoint q = G.apply(k, ProjectivePoint::affine(b.image.center(col, row)));
        if (q.isInfinity(1e-12)) continue;
        const auto px = b.image.pixelOf(q.toAffine());
        if (!px || (interiorOnly && !interiorPixel(b, px->first, px->second))) continue;
        ++compared;
        agree += b.cycle[std::size_t(px->second) * b.image.width + px->first] == perm[c];
      }
    if (compared) worst = std::min(worst, double(agree) / double(compared));
  }
  return worst;
}

namespace {

void drawLine(Raster& r, Complex a, Complex b, RGB color) {
  const double pixel = (r.viewport.x1 - r.viewport.x0) / r.width;
  const double len = std::abs(b - a);
  if (!std::isfinite(len) || len > 1.0) return;  // a jump through the far side of the chart
  const int steps = int(std::ceil(len / (0.5 * pixel))) + 1;
  for (int s = 0; s <= steps; ++s) {
    const auto px = r.pixelOf(a + (b - a) * (double(s) / steps));
    if (px) r.at(px->first, px->second) = color;
  }
}

void drawPolyline(Raster& r, const std::vector<ProjectivePoint>& pts, RGB color) {
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i].isInfinity(1e-9) || pts[i + 1].isInfinity(1e-9)) continue;
    drawLine(r, pts[i].toAffine(), pts[i + 1].toAffine(), color);
  }
}

std::vector<ProjectivePoint> greatArc(const ProjectivePoint& p, const ProjectivePoint& q, int steps) {
  const Vec3 a = p.toSphere(), b = q.toSphere();
  std::vector<ProjectivePoint> out;
  for (int s = 0; s <= steps; ++s) {
    const double t = double(s) / steps;
    Vec3 v{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2])};
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (auto& x : v) x /= n;
    out.push_back(ProjectivePoint::fromSphere(v));
  }
  return out;
}

}  // namespace

std::vector<std::array<ProjectivePoint, 2>> mirrorEdges(const MapDynamics& d) {
  const Orbit& vertices = icosaSpecialOrbits().vertices;
  auto pentagon = [&](const ProjectivePoint& p) {
    std::size_t best = 0;
    for (std::size_t v = 1; v < vertices.size(); ++v)
      if (chordal(p, vertices.points[v]) < chordal(p, vertices.points[best])) best = v;
    return best;
  };
  std::vector<std::size_t> owner;
  for (const auto& p : d.critical.points) owner.push_back(pentagon(p));
  std::vector<std::array<ProjectivePoint, 2>> out;
  for (std::size_t i = 0; i < d.critical.size(); ++i) {
    std::size_t best = i;
    double dist = 3;
    for (std::size_t j = 0; j < d.critical.size(); ++j) {
      if (owner[j] == owner[i]) continue;
      const double c = chordal(d.critical.points[i], d.critical.points[j]);
      if (c < dist) dist = c, best = j;
    }
    if (best > i) out.push_back({d.critical.points[i], d.critical.points[best]});
  }
  return out;
}

std::vector<std::vector<ProjectivePoint>> pentagonEdges(const MapDynamics& d) {
  const EdgeAnchor e = findEdgeAnchor(d);
  const SegmentTrajectory s = segmentTrajectory(d, e.z, 1e-3, 24, 200);
  const IcosaGroup& G = icosaGroup();
  std::vector<std::vector<ProjectivePoint>> out;
  for (std::size_t k = 0; k < G.size(); ++k)
    for (std::size_t j = 2; j < s.images.size(); j += 2) {
      std::vector<ProjectivePoint> line;
      for (Complex z : s.images[j]) line.push_back(G.apply(k, ProjectivePoint::affine(z)));
      out.push_back(std::move(line));
    }
  return out;
}

JuliaImage renderJulia(const MapDynamics& d, int width, int height, Viewport v, const JuliaOptions& o) {
  ConvergeOptions co;
  co.maxIter = o.maxIter;
  BasinImage b = renderBasins(d, width, height, v, o.threads, co);
  JuliaImage j{Raster(width, height, v), std::vector<std::uint8_t>(b.cycle.size(), 0), 0};
  // a pixel's time is the slowest of its center and four corners
  const int cw = width + 1;
  std::vector<std::int16_t> corner(std::size_t(cw) * (height + 1));
  parallelFor(corner.size(), o.threads, [&](std::size_t i) {
    const Complex z(v.x0 + double(i % cw) * (v.x1 - v.x0) / width, v.y1 - double(i / cw) * (v.y1 - v.y0) / height);
    const auto r = convergeToCycle(d, ProjectivePoint::affine(z), co);
    corner[i] = std::int16_t(r.cycle < 0 ? o.maxIter : r.iterations);
  });
  std::vector<std::int16_t> times(b.cycle.size());
  for (int row = 0; row < height; ++row)
    for (int col = 0; col < width; ++col) {
      const std::size_t i = std::size_t(row) * width + col, c = std::size_t(row) * cw + col;
      times[i] = std::max({b.cycle[i] < 0 ? std::int16_t(o.maxIter) : b.iterations[i], corner[c], corner[c + 1],
                           corner[c + cw], corner[c + cw + 1]});
    }
  std::vector<std::int16_t> sorted = times;
  const std::size_t q = std::min(sorted.size() - 1, std::size_t(o.quantile * double(sorted.size())));
  std::nth_element(sorted.begin(), sorted.begin() + q, sorted.end());
  j.threshold = sorted[q];
  const Palette pal = Palette::cycles(int(d.cycles.size()));
  for (std::size_t i = 0; i < times.size(); ++i) {
    j.marked[i] = b.cycle[i] < 0 || times[i] > j.threshold;
    if (j.marked[i]) {
      j.image.pixels[i] = RGB{};
    } else {
      const RGB c = pal[b.cycle[i]];
      j.image.pixels[i] = {std::uint8_t(165 + c.r * 90 / 255), std::uint8_t(165 + c.g * 90 / 255),
                           std::uint8_t(165 + c.b * 90 / 255)};
    }
  }
  if (o.overlay) {
    for (const auto& edge : mirrorEdges(d)) drawPolyline(j.image, greatArc(edge[0], edge[1], 256), {220, 0, 0});
    for (const auto& line : pentagonEdges(d)) drawPolyline(j.image, line, {0, 70, 230});
  }
  return j;
}

double conjugationSymmetry(const JuliaImage& j) {
  std::size_t marked = 0, both = 0;
  for (int row = 0; row < j.image.height; ++row)
    for (int col = 0; col < j.image.width; ++col) {
      if (!j.isMarked(col, row)) continue;
      ++marked;
      const auto px = j.image.pixelOf(std::conj(j.image.center(col, row)));
      if (px && j.isMarked(px->first, px->second)) ++both;
    }
  return marked ? double(both) / double(marked) : 1.0;
}

Raster renderNewton(const NewtonRaster& n) {
  const int rows = n.rows - 1;
  Raster r(rows, rows, Viewport{0, 0, 1, 1});
  const Palette pal = Palette::newton();
  std::size_t cell = 0;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j <= i; ++j, ++cell) r.at(j, i) = pal[n.cls[cell]];
  return r;
}

Scatter exportOrbitScatter(const Orbit& o, const std::vector<int>& labels, int size) {
  if (!labels.empty() && labels.size() != o.size())
    throw std::invalid_argument("label count does not match the orbit");
  Scatter s{nlohmann::json::object(), Raster(size, size, Viewport{-1.05, -1.05, 1.05, 1.05})};
  for (auto& px : s.image.pixels) px = {255, 255, 255};
  const Palette pal = labels.empty() ? Palette::cycles(1) : Palette::cycles(5);
  nlohmann::json pts = nlohmann::json::array();
  std::map<int, int> groups;
  for (std::size_t i = 0; i < o.size(); ++i) {
    const Vec3 v = o.points[i].toSphere();
    const Complex z = o.points[i].toAffine();
    nlohmann::json p{{"re", z.real()}, {"im", z.imag()}, {"sphere", {v[0], v[1], v[2]}}};
    const int label = labels.empty() ? 0 : labels[i];
    if (!labels.empty()) {
      p["label"] = label;
      ++groups[label];
    }
    pts.push_back(p);
    RGB c = pal[labels.empty() ? 0 : (label - 1) % 5];
    if (v[2] > 0) c = {std::uint8_t(c.r / 3 + 170), std::uint8_t(c.g / 3 + 170), std::uint8_t(c.b / 3 + 170)};
    const Complex at(v[0], v[1]);
    for (int dy = -3; dy <= 3; ++dy)
      for (int dx = -3; dx <= 3; ++dx) {
        if (dx * dx + dy * dy > 9) continue;
        const auto px = s.image.pixelOf(at);
        if (!px) continue;
        const int cx = px->first + dx, cy = px->second + dy;
        if (cx >= 0 && cx < size && cy >= 0 && cy < size) s.image.at(cx, cy) = c;
      }
  }
  s.json["count"] = o.size();
  s.json["points"] = pts;
  if (!labels.empty()) {
    nlohmann::json g = nlohmann::json::object();
    for (auto [l, c] : groups) g[std::to_string(l)] = c;
    s.json["groups"] = g;
  }
  return s;
}

void writePPM(const Raster& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "P6\n" << r.width << ' ' << r.height << "\n255\n";
  for (const RGB& p : r.pixels) {
    const char rgb[3] = {char(p.r), char(p.g), char(p.b)};
    out.write(rgb, 3);
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

bool pngSupported() {
#ifdef ICOSA_HAVE_PNG
  return true;
#else
  return false;
#endif
}

void writePNG(const Raster& r, const std::string& path) {
#ifdef ICOSA_HAVE_PNG
  std::unique_ptr<FILE, int (*)(FILE*)> f(std::fopen(path.c_str(), "wb"), &std::fclose);
  if (!f) throw std::runtime_error("cannot open " + path);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("libpng initialisation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("libpng write failed: " + path);
  }
  png_init_io(png, f.get());
  png_set_IHDR(png, info, r.width, r.height, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int row = 0; row < r.height; ++row)
    png_write_row(png, reinterpret_cast<png_const_bytep>(&r.pixels[std::size_t(row) * r.width]));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
#else
  (void)r;
  throw std::runtime_error("PNG output not built in; use a .ppm path: " + path);
#endif
}

void writeImage(const Raster& r, const std::string& path) {
  const bool png = path.size() >= 4 && path.compare(path.size() - 4, 4, ".png") == 0;
  png ? writePNG(r, path) : writePPM(r, path);
}

}  // namespace icosa
