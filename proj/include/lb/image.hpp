#pragma once

#include <cstdint>
#include <vector>

#include "lb/errors.hpp"

namespace lb {

// 8-bit RGB image, row-major, channel-interleaved.
struct ImageTensor {
    static constexpr int channels = 3;

    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> data;  // height * width * 3

    ImageTensor() = default;
    ImageTensor(int h, int w) : height(h), width(w), data(static_cast<std::size_t>(h) * w * channels, 0) {}

    std::uint8_t& at(int y, int x, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    std::uint8_t at(int y, int x, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }

    std::size_t pixel_count() const { return static_cast<std::size_t>(height) * width; }

    void check_valid() const {
        if (height <= 0 || width <= 0) throw Error("image dimensions must be positive");
        if (data.size() != pixel_count() * channels) throw Error("image data length mismatch");
    }

    bool operator==(const ImageTensor&) const = default;
};

}  // namespace lb
