#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace lb {

namespace detail {
constexpr std::array<std::uint32_t, 256> make_crc32_table() {
    std::array<std::uint32_t, 256> table{};
    for (std::uint32_t i = 0; i < 256; ++i) {
        std::uint32_t c = i;
        for (int k = 0; k < 8; ++k) {
            c = (c & 1u) ? 0xedb88320u ^ (c >> 1) : (c >> 1);
        }
        table[i] = c;
    }
    return table;
}
inline constexpr auto crc32_table = make_crc32_table();
}  // namespace detail

// CRC-32 (IEEE 802.3, reflected).
inline std::uint32_t crc32(const void* data, std::size_t len, std::uint32_t seed = 0) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint32_t c = seed ^ 0xffffffffu;
    for (std::size_t i = 0; i < len; ++i) {
        c = detail::crc32_table[(c ^ p[i]) & 0xffu] ^ (c >> 8);
    }
    return c ^ 0xffffffffu;
}

}  // namespace lb
