#include "sgpcover/labelling.hpp"

#include <algorithm>  // for max

#include "sgpcover/errors.hpp"

namespace sgpcover {

  Labelling::Labelling(std::size_t                        source_degree,
                       std::vector<PartialTransformation> encodings)
      : _source_degree(source_degree), _bottom_size(0), _encode() {
    for (auto const& w : encodings) {
      _bottom_size = std::max(_bottom_size, w.domain().size());
    }
    _encode.reserve(encodings.size());
    _decode.reserve(encodings.size());
    for (std::size_t i = 0; i < encodings.size(); ++i) {
      auto const& w = encodings[i];
      if (w.degree() != source_degree) {
        throw InvalidArgument("encoding for top state " + std::to_string(i + 1)
                              + " has the wrong degree");
      }
      if (!w.is_injective()) {
        throw InvalidArgument("encoding for top state " + std::to_string(i + 1)
                              + " is not injective");
      }
      auto img = w.image_set();
      for (std::size_t z = 0; z < img.size(); ++z) {
        if (img[z] != z + 1) {
          throw InvalidArgument("encoding for top state "
                                + std::to_string(i + 1)
                                + " does not have a contiguous image");
        }
      }
      // Re-home every encoding onto the common bottom set.
      PartialTransformation encode(source_degree, _bottom_size);
      for (State x : w.domain()) {
        encode.set(x, *w(x));
      }
      _sizes.push_back(img.size());
      _decode.push_back(encode.inverse());
      _encode.push_back(std::move(encode));
    }
  }

  std::size_t Labelling::preimage_size(State y) const {
    encoding(y);  // range check
    return _sizes[y - 1];
  }

  PartialTransformation const& Labelling::encoding(State y) const {
    if (y < 1 || y > _encode.size()) {
      throw InvalidArgument("top state " + std::to_string(y)
                            + " out of range for labelling of "
                            + std::to_string(_encode.size()) + " states");
    }
    return _encode[y - 1];
  }

  PartialTransformation const& Labelling::decoding(State y) const {
    if (y < 1 || y > _decode.size()) {
      throw InvalidArgument("top state " + std::to_string(y)
                            + " out of range for labelling of "
                            + std::to_string(_decode.size()) + " states");
    }
    return _decode[y - 1];
  }

  Labelling squash_labelling(StateRelation const& theta) {
    auto                               inv = inverse(theta);
    std::size_t                        k   = 0;
    for (auto const& pre : inv.images()) {
      k = std::max(k, pre.size());
    }
    std::vector<PartialTransformation> encodings;
    encodings.reserve(inv.source_degree());
    for (auto const& pre : inv.images()) {
      // pre is sorted ascending
      PartialTransformation w(theta.source_degree(), k);
      for (std::size_t i = 0; i < pre.size(); ++i) {
        w.set(pre[i], static_cast<State>(i + 1));
      }
      encodings.push_back(std::move(w));
    }
    return Labelling(theta.source_degree(), std::move(encodings));
  }

  Labelling nn1_labelling(std::size_t n) {
    if (n < 2) {
      throw InvalidArgument("the n(n-1) labelling needs at least 2 states");
    }
    std::vector<PartialTransformation> encodings;
    encodings.reserve(n);
    for (State y = 1; y <= n; ++y) {
      PartialTransformation w(n, n - 1);
      for (State x = 1; x <= n; ++x) {
        if (x < y) {
          w.set(x, x);
        } else if (x > y) {
          w.set(x, x - 1);
        }
      }
      encodings.push_back(std::move(w));
    }
    return Labelling(n, std::move(encodings));
  }

}  // namespace sgpcover
