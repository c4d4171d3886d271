#pragma once

// Images: basins of the critical 2-cycles, a convergence-time Julia proxy with
// the soccer-ball edges drawn over it, Newton basins, and orbit scatters.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "icosa/dynamics.hpp"
#include "icosa/search.hpp"

namespace icosa {

struct RGB {  // packed so rows can be written directly
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const RGB&, const RGB&) = default;
};

struct Viewport {
  double x0 = -2, y0 = -2, x1 = 2, y1 = 2;
  /// Throws std::invalid_argument unless x0 < x1 and y0 < y1.
  void validate() const;
};

struct Raster {
  int width = 0, height = 0;
  Viewport viewport;
  std::vector<RGB> pixels;  // row-major, row 0 at the top

  Raster() = default;
  Raster(int w, int h, Viewport v = {});
  RGB& at(int col, int row) { return pixels[std::size_t(row) * width + col]; }
  const RGB& at(int col, int row) const { return pixels[std::size_t(row) * width + col]; }
  Complex center(int col, int row) const;
  /// Pixel containing z, if inside the viewport.
  std::optional<std::pair<int, int>> pixelOf(Complex z) const;
};

class Palette {
 public:
  /// red, green, blue, olive, violet for the Newton classes.
  static Palette newton();
  /// n distinct colours, none of them black.
  static Palette cycles(int n);

  RGB operator[](int id) const { return id < 0 ? RGB{} : colors_.at(id); }
  std::size_t size() const { return colors_.size(); }

 private:
  std::vector<RGB> colors_;
};

struct BasinImage {
  Raster image;
  std::vector<std::int16_t> cycle;  // per pixel, -1 for no limit
  std::vector<std::int16_t> iterations;
  std::vector<std::size_t> counts;  // per cycle
  double nonConverged = 0;          // fraction of pixels
  int colorsPresent() const;
};

BasinImage renderBasins(const MapDynamics& d, int width, int height, Viewport v = {}, int threads = 1,
                        const ConvergeOptions& o = {});

/// Fraction of comparable pixels whose cycle matches the transported cycle under
/// each element of the real-axis stabilizer (the worst element is returned).
/// With interiorOnly, pixels touching another basin at either end are skipped:
/// the basins are interleaved below pixel scale, and the Moebius maps do not
/// carry pixels onto pixels.
double klein4Score(const BasinImage& b, const MapDynamics& d, bool interiorOnly = true);

struct JuliaImage {
  Raster image;
  std::vector<std::uint8_t> marked;
  int threshold = 0;  // marked iff iterations > threshold or no limit
  bool isMarked(int col, int row) const { return marked[std::size_t(row) * image.width + col] != 0; }
};

struct JuliaOptions {
  int maxIter = 400;
  double quantile = 0.9;
  bool overlay = true;
  int threads = 1;
};

JuliaImage renderJulia(const MapDynamics& d, int width, int height, Viewport v = {}, const JuliaOptions& o = {});

/// |M intersect conj(M)| / |M| for the marked set M.
double conjugationSymmetry(const JuliaImage& j);

/// Great-circle arcs between the 30 pairs of critical points joined across two hexagons.
std::vector<std::array<ProjectivePoint, 2>> mirrorEdges(const MapDynamics& d);
/// Polylines along all pentagon-hexagon edges: the even images of a short
/// segment through the edge anchor, transported by the group.
std::vector<std::vector<ProjectivePoint>> pentagonEdges(const MapDynamics& d);

/// Triangle drawn row by row: row i has i + 1 cells.
Raster renderNewton(const NewtonRaster& n);

struct Scatter {
  nlohmann::json json;
  Raster image;
};
/// Orthographic view of the hemisphere around 0; far-side points are dimmed.
/// An empty label vector gives a single colour.
Scatter exportOrbitScatter(const Orbit& o, const std::vector<int>& labels = {}, int size = 400);

void writePPM(const Raster& r, const std::string& path);
void writePNG(const Raster& r, const std::string& path);
bool pngSupported();
/// PNG for a .png extension, PPM otherwise.
void writeImage(const Raster& r, const std::string& path);

}  // namespace icosa
