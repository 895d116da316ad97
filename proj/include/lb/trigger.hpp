#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lb/image.hpp"
#include "lb/rng.hpp"

namespace lb {

enum class SpotShape : std::uint8_t { circle = 0, rectangle = 1 };
enum class SpotLocation : std::uint8_t { center = 0, random = 1 };

// The four tunable spot parameters.
struct TriggerParams {
    int scale_k = 6;                               // spot size divisor, 2..14
    int opacity_w = 90;                            // 15..255, multiple of 15
    SpotLocation location = SpotLocation::center;  // placement rule
    int highlight_h = 0;                           // 0 or 1

    void check_valid() const;
    bool operator==(const TriggerParams&) const = default;
};

struct TriggerSpec {
    std::string trigger_id;
    std::array<std::uint8_t, 3> color{255, 0, 0};  // base hue, applied additively
    SpotShape shape = SpotShape::circle;
    TriggerParams params;
};

// Resolved placement of one spot on one image.
struct SpotGeometry {
    int center_x = 0;
    int center_y = 0;
    int semi_major = 1;  // radius (circle) / half the long side (rectangle)
    int feather = 1;     // linear falloff band width, px

    bool operator==(const SpotGeometry&) const = default;
};

// Rectangle spots are axis-aligned with the long side horizontal.
inline constexpr double kRectAspect = 2.5;          // semi-major : semi-minor
inline constexpr double kFeatherFrac = 0.15;        // feather = round(0.15 * S), min 1
inline constexpr double kHighlightRadiusFrac = 0.4; // highlight disc radius = 0.4 * S
inline constexpr double kHighlightGain = 0.6;       // p' = p + round(0.6 * (255 - p))

int spot_semi_major(int image_width, int image_height, int scale_k);
int spot_feather(int semi_major);
double spot_half_height(SpotShape shape, int semi_major);

bool geometry_in_bounds(int image_width, int image_height, SpotShape shape, const SpotGeometry& g);
bool spot_fits(int image_width, int image_height, SpotShape shape, int semi_major, SpotLocation location);

SpotGeometry center_geometry(int image_width, int image_height, SpotShape shape, int semi_major);
SpotGeometry random_geometry(int image_width, int image_height, SpotShape shape, int semi_major, Rng& rng);

// Per-pixel spot intensity: 1 in the core, linear falloff over the feather
// band, exactly 0 at and outside the shape boundary.
std::vector<double> render_spot_mask(int image_width, int image_height, SpotShape shape,
                                     const SpotGeometry& g);

struct AppliedTrigger {
    ImageTensor image;
    SpotGeometry geometry;
};

// Blend at an explicit placement. opacity may be fractional (distorted
// application); the digital path passes the integer parameter through.
ImageTensor apply_trigger_at(const ImageTensor& img, SpotShape shape,
                             const std::array<std::uint8_t, 3>& color, double opacity,
                             int highlight_h, const SpotGeometry& g);

// Resolve placement from the spec (center or seeded-random) and blend.
AppliedTrigger apply_trigger(const ImageTensor& img, const TriggerSpec& spec, std::uint64_t rng_seed);

// Digital-to-physical gap simulation: perturbed opacity/size/hue plus an
// optional box blur over the spot area, all drawn from one seed.
struct DistortionConfig {
    double opacity_lo = 0.8, opacity_hi = 1.2;
    double size_lo = 0.85, size_hi = 1.15;
    int hue_jitter = 12;   // per-channel, uniform in [-hue_jitter, +hue_jitter]
    bool allow_blur = true;

    static DistortionConfig none() { return {1.0, 1.0, 1.0, 1.0, 0, false}; }
};

struct DistortionRecord {
    double opacity_scale = 1.0;
    double size_scale = 1.0;
    std::array<int, 3> color_jitter{0, 0, 0};
    int blur_radius = 0;
    std::uint64_t seed = 0;
};

DistortionRecord distort_trigger(const TriggerSpec& spec, std::uint64_t rng_seed,
                                 const DistortionConfig& cfg = DistortionConfig());

// Apply a distorted trigger: effective S/opacity/color from the record, then
// placement per the spec, blend, highlight, and blur. With an identity record
// this is bit-identical to apply_trigger.
AppliedTrigger apply_distorted(const ImageTensor& img, const TriggerSpec& spec,
                               const DistortionRecord& rec, std::uint64_t placement_seed);

}  // namespace lb
