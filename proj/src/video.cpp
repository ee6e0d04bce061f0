#include "stmfa/video.hpp"

#include "stmfa/errors.hpp"

#include <cstring>

namespace stmfa {

VideoTensor::VideoTensor(Tensor frames, std::pair<double, double> value_range)
    : frames_(std::move(frames)), value_range_(value_range) {
    if (frames_.rank() != 4)
        throw ContractError("video tensor must be rank 4 (T,H,W,C), got " + frames_.shape_str());
    if (frames_.extent(0) < 1 || frames_.extent(1) < 2 || frames_.extent(2) < 2 || frames_.extent(3) < 1)
        throw ContractError("video tensor needs T>=1, H>=2, W>=2, C>=1, got " + frames_.shape_str());
}

VideoTensor VideoTensor::zeros(std::size_t t, std::size_t h, std::size_t w, std::size_t c) {
    return VideoTensor(Tensor({t, h, w, c}));
}

Tensor VideoTensor::frame(std::size_t t) const {
    if (t >= frame_count())
        throw ContractError("frame index out of range");
    const std::size_t n = frame_numel();
    Tensor out({height(), width(), channels()});
    std::memcpy(out.data(), frames_.data() + t * n, n * sizeof(double));
    return out;
}

void VideoTensor::set_frame(std::size_t t, const Tensor& frame) {
    if (t >= frame_count())
        throw ContractError("frame index out of range");
    if (frame.numel() != frame_numel())
        throw ContractError("frame shape " + frame.shape_str() + " does not match clip");
    std::memcpy(frames_.data() + t * frame_numel(), frame.data(), frame_numel() * sizeof(double));
}

VideoTensor VideoTensor::slice_time(std::size_t first, std::size_t count) const {
    if (first + count > frame_count())
        throw ContractError("time slice out of range");
    Tensor out({count, height(), width(), channels()});
    std::memcpy(out.data(), frames_.data() + first * frame_numel(),
                count * frame_numel() * sizeof(double));
    return VideoTensor(std::move(out), value_range_);
}

bool VideoTensor::within_range() const {
    for (double v : frames_.samples())
        if (v < value_range_.first || v > value_range_.second) return false;
    return true;
}

} // namespace stmfa
