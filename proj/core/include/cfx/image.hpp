#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cfx {

// Square grayscale image, row-major float pixels in [0,1].
class Image {
public:
    Image() = default;
    explicit Image(int side, float fill = 0.0f);

    int side() const { return side_; }
    bool empty() const { return side_ == 0; }
    std::size_t pixel_count() const { return pix_.size(); }

    float& at(int row, int col) { return pix_[static_cast<std::size_t>(row) * side_ + col]; }
    float at(int row, int col) const { return pix_[static_cast<std::size_t>(row) * side_ + col]; }

    float* data() { return pix_.data(); }
    const float* data() const { return pix_.data(); }
    std::vector<float>& pixels() { return pix_; }
    const std::vector<float>& pixels() const { return pix_; }

    bool same_shape(const Image& other) const { return side_ == other.side_; }
    bool operator==(const Image& other) const = default;

    // Clamp every pixel into [0,1].
    void clamp01();

private:
    int side_ = 0;
    std::vector<float> pix_;
};

// 8-bit grayscale PNG round trip. Values are quantized to round(v*255)/255,
// so the per-pixel error of save followed by load is at most 1/255.
void save_png(const Image& image, const std::string& path);
Image load_png(const std::string& path);

}  // namespace cfx
