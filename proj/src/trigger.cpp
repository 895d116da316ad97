#include "lb/trigger.hpp"

#include <algorithm>
#include <cmath>

namespace lb {

void TriggerParams::check_valid() const {
    if (scale_k < 2 || scale_k > 14) throw Error("scale_k out of range [2,14]");
    if (opacity_w < 15 || opacity_w > 255 || opacity_w % 15 != 0)
        throw Error("opacity_w must be a multiple of 15 in [15,255]");
    if (highlight_h != 0 && highlight_h != 1) throw Error("highlight_h must be 0 or 1");
}

int spot_semi_major(int image_width, int image_height, int scale_k) {
    double s = static_cast<double>(std::max(image_width, image_height)) / scale_k;
    return std::max(1, static_cast<int>(std::lround(s)));
}

int spot_feather(int semi_major) {
    return std::max(1, static_cast<int>(std::lround(kFeatherFrac * semi_major)));
}

double spot_half_height(SpotShape shape, int semi_major) {
    return shape == SpotShape::circle ? static_cast<double>(semi_major)
                                      : semi_major / kRectAspect;
}

bool geometry_in_bounds(int image_width, int image_height, SpotShape shape, const SpotGeometry& g) {
    double hh = spot_half_height(shape, g.semi_major);
    return g.center_x - g.semi_major >= 0 && g.center_x + g.semi_major <= image_width - 1 &&
           g.center_y - hh >= 0.0 && g.center_y + hh <= image_height - 1.0;
}

namespace {

struct CenterRange {
    int x_lo, x_hi, y_lo, y_hi;
    bool empty() const { return x_lo > x_hi || y_lo > y_hi; }
};

CenterRange valid_centers(int w, int h, SpotShape shape, int semi_major) {
    double hh = spot_half_height(shape, semi_major);
    return {semi_major, w - 1 - semi_major,
            static_cast<int>(std::ceil(hh)), static_cast<int>(std::floor(h - 1 - hh))};
}

}  // namespace

bool spot_fits(int image_width, int image_height, SpotShape shape, int semi_major,
               SpotLocation location) {
    CenterRange r = valid_centers(image_width, image_height, shape, semi_major);
    if (r.empty()) return false;
    if (location == SpotLocation::center) {
        SpotGeometry g{image_width / 2, image_height / 2, semi_major, spot_feather(semi_major)};
        return geometry_in_bounds(image_width, image_height, shape, g);
    }
    return true;
}

SpotGeometry center_geometry(int image_width, int image_height, SpotShape shape, int semi_major) {
    SpotGeometry g{image_width / 2, image_height / 2, semi_major, spot_feather(semi_major)};
    if (!geometry_in_bounds(image_width, image_height, shape, g))
        throw Error("spot does not fit the image at the center placement");
    return g;
}

SpotGeometry random_geometry(int image_width, int image_height, SpotShape shape, int semi_major,
                             Rng& rng) {
    CenterRange r = valid_centers(image_width, image_height, shape, semi_major);
    if (r.empty()) throw Error("no in-bounds placement exists for this spot size");
    SpotGeometry g;
    g.center_x = rng.next_int(r.x_lo, r.x_hi);
    g.center_y = rng.next_int(r.y_lo, r.y_hi);
    g.semi_major = semi_major;
    g.feather = spot_feather(semi_major);
    return g;
}

std::vector<double> render_spot_mask(int image_width, int image_height, SpotShape shape,
                                     const SpotGeometry& g) {
    if (!geometry_in_bounds(image_width, image_height, shape, g))
        throw Error("spot geometry out of image bounds");
    std::vector<double> mask(static_cast<std::size_t>(image_width) * image_height, 0.0);
    const double s = g.semi_major;
    const double hh = spot_half_height(shape, g.semi_major);
    const double feather = g.feather;
    for (int y = 0; y < image_height; ++y) {
        for (int x = 0; x < image_width; ++x) {
            double dx = x - g.center_x;
            double dy = y - g.center_y;
            // depth: distance inward from the shape boundary, negative outside
            double depth;
            if (shape == SpotShape::circle) {
                depth = s - std::sqrt(dx * dx + dy * dy);
            } else {
                depth = std::min(s - std::abs(dx), hh - std::abs(dy));
            }
            mask[static_cast<std::size_t>(y) * image_width + x] =
                std::clamp(depth / feather, 0.0, 1.0);
        }
    }
    return mask;
}

ImageTensor apply_trigger_at(const ImageTensor& img, SpotShape shape,
                             const std::array<std::uint8_t, 3>& color, double opacity,
                             int highlight_h, const SpotGeometry& g) {
    img.check_valid();
    std::vector<double> mask = render_spot_mask(img.width, img.height, shape, g);
    ImageTensor out = img;
    const double scale = opacity / 255.0;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            double m = mask[static_cast<std::size_t>(y) * img.width + x];
            if (m <= 0.0) continue;
            for (int c = 0; c < ImageTensor::channels; ++c) {
                long contrib = std::lround(color[c] * scale * m);
                long v = static_cast<long>(out.at(y, x, c)) + contrib;
                out.at(y, x, c) = static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
            }
        }
    }
    if (highlight_h == 1) {
        const double r = kHighlightRadiusFrac * g.semi_major;
        const double r2 = r * r;
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                double dx = x - g.center_x;
                double dy = y - g.center_y;
                if (dx * dx + dy * dy > r2) continue;
                for (int c = 0; c < ImageTensor::channels; ++c) {
                    int p = out.at(y, x, c);
                    out.at(y, x, c) = static_cast<std::uint8_t>(
                        p + static_cast<int>(std::lround(kHighlightGain * (255 - p))));
                }
            }
        }
    }
    return out;
}

AppliedTrigger apply_trigger(const ImageTensor& img, const TriggerSpec& spec,
                             std::uint64_t rng_seed) {
    img.check_valid();
    spec.params.check_valid();
    int s = spot_semi_major(img.width, img.height, spec.params.scale_k);
    SpotGeometry g;
    if (spec.params.location == SpotLocation::center) {
        g = center_geometry(img.width, img.height, spec.shape, s);
    } else {
        Rng rng(rng_seed);
        g = random_geometry(img.width, img.height, spec.shape, s, rng);
    }
    ImageTensor out = apply_trigger_at(img, spec.shape, spec.color,
                                       static_cast<double>(spec.params.opacity_w),
                                       spec.params.highlight_h, g);
    return {std::move(out), g};
}

DistortionRecord distort_trigger(const TriggerSpec& spec, std::uint64_t rng_seed,
                                 const DistortionConfig& cfg) {
    spec.params.check_valid();
    Rng rng(rng_seed);
    DistortionRecord rec;
    rec.opacity_scale = rng.next_double(cfg.opacity_lo, cfg.opacity_hi);
    rec.size_scale = rng.next_double(cfg.size_lo, cfg.size_hi);
    for (int c = 0; c < 3; ++c)
        rec.color_jitter[c] = cfg.hue_jitter == 0 ? 0 : rng.next_int(-cfg.hue_jitter, cfg.hue_jitter);
    rec.blur_radius = cfg.allow_blur ? (rng.next_bool() ? 1 : 0) : 0;
    rec.seed = rng_seed;
    return rec;
}

namespace {

void box_blur_region(ImageTensor& img, int x_lo, int x_hi, int y_lo, int y_hi, int radius) {
    ImageTensor src = img;
    x_lo = std::max(0, x_lo);
    y_lo = std::max(0, y_lo);
    x_hi = std::min(img.width - 1, x_hi);
    y_hi = std::min(img.height - 1, y_hi);
    for (int y = y_lo; y <= y_hi; ++y) {
        for (int x = x_lo; x <= x_hi; ++x) {
            for (int c = 0; c < ImageTensor::channels; ++c) {
                long sum = 0;
                int count = 0;
                for (int dy = -radius; dy <= radius; ++dy) {
                    for (int dx = -radius; dx <= radius; ++dx) {
                        int yy = y + dy, xx = x + dx;
                        if (yy < 0 || yy >= img.height || xx < 0 || xx >= img.width) continue;
                        sum += src.at(yy, xx, c);
                        ++count;
                    }
                }
                img.at(y, x, c) = static_cast<std::uint8_t>(
                    std::lround(static_cast<double>(sum) / count));
            }
        }
    }
}

}  // namespace

AppliedTrigger apply_distorted(const ImageTensor& img, const TriggerSpec& spec,
                               const DistortionRecord& rec, std::uint64_t placement_seed) {
    img.check_valid();
    spec.params.check_valid();
    int s = spot_semi_major(img.width, img.height, spec.params.scale_k);
    int s_eff = std::max(1, static_cast<int>(std::lround(s * rec.size_scale)));
    std::array<std::uint8_t, 3> color = spec.color;
    for (int c = 0; c < 3; ++c) {
        int v = static_cast<int>(color[c]) + rec.color_jitter[c];
        color[c] = static_cast<std::uint8_t>(std::clamp(v, 0, 255));
    }
    double opacity = std::clamp(spec.params.opacity_w * rec.opacity_scale, 15.0, 255.0);

    SpotGeometry g;
    if (spec.params.location == SpotLocation::center) {
        g = center_geometry(img.width, img.height, spec.shape, s_eff);
    } else {
        Rng rng(placement_seed);
        g = random_geometry(img.width, img.height, spec.shape, s_eff, rng);
    }
    ImageTensor out = apply_trigger_at(img, spec.shape, color, opacity, spec.params.highlight_h, g);
    if (rec.blur_radius > 0) {
        double hh = spot_half_height(spec.shape, g.semi_major);
        box_blur_region(out, g.center_x - g.semi_major, g.center_x + g.semi_major,
                        g.center_y - static_cast<int>(std::ceil(hh)),
                        g.center_y + static_cast<int>(std::ceil(hh)), rec.blur_radius);
    }
    return {std::move(out), g};
}

}  // namespace lb
