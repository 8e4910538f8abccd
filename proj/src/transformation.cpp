#include "sgpcover/transformation.hpp"

#include <algorithm>  // for sort, unique, all_of
#include <cctype>     // for isdigit, isspace
#include <sstream>    // for ostringstream

#include "sgpcover/errors.hpp"

namespace sgpcover {

  namespace {
    std::string join(std::vector<State> const& v, std::size_t count) {
      std::ostringstream out;
      out << '[';
      for (std::size_t i = 0; i < count; ++i) {
        if (i != 0) {
          out << ',';
        }
        out << v[i];
      }
      out << ']';
      return out.str();
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Transformation
  ////////////////////////////////////////////////////////////////////////

  Transformation::Transformation(std::vector<State> images)
      : _images(std::move(images)) {
    auto const n = _images.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (_images[i] < 1 || _images[i] > n) {
        throw InvalidArgument("image " + std::to_string(_images[i])
                              + " of point " + std::to_string(i + 1)
                              + " is out of range for degree "
                              + std::to_string(n));
      }
    }
  }

  Transformation Transformation::identity(std::size_t degree) {
    Transformation t;
    t._images.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      t._images[i] = static_cast<State>(i + 1);
    }
    return t;
  }

  Transformation Transformation::constant(std::size_t degree, State value) {
    if (value < 1 || value > degree) {
      throw InvalidArgument("constant value " + std::to_string(value)
                            + " out of range for degree "
                            + std::to_string(degree));
    }
    Transformation t;
    t._images.assign(degree, value);
    return t;
  }

  State Transformation::operator()(State x) const {
    if (x < 1 || x > _images.size()) {
      throw InvalidArgument("state " + std::to_string(x)
                            + " out of range for degree "
                            + std::to_string(_images.size()));
    }
    return _images[x - 1];
  }

  bool Transformation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i + 1) {
        return false;
      }
    }
    return true;
  }

  bool Transformation::is_permutation() const {
    return image_set().size() == degree();
  }

  bool Transformation::is_idempotent() const {
    return std::all_of(_images.begin(), _images.end(), [this](State y) {
      return _images[y - 1] == y;
    });
  }

  std::vector<State> Transformation::image_set() const {
    std::vector<State> result(_images);
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  std::string Transformation::to_string() const {
    return join(_images, _images.size());
  }

  std::string Transformation::to_trimmed_string() const {
    std::size_t last = _images.size();
    while (last > 0 && _images[last - 1] == last) {
      --last;
    }
    std::size_t length = last;
    for (std::size_t i = 0; i < last; ++i) {
      length = std::max<std::size_t>(length, _images[i]);
    }
    return join(_images, length);
  }

  Transformation compose(Transformation const& a, Transformation const& b) {
    if (a.degree() != b.degree()) {
      throw InvalidArgument("cannot compose transformations of degree "
                            + std::to_string(a.degree()) + " and "
                            + std::to_string(b.degree()));
    }
    std::vector<State> images(a.degree());
    for (std::size_t i = 0; i < images.size(); ++i) {
      images[i] = b[a.images()[i]];
    }
    return Transformation(std::move(images), Transformation::Unchecked{});
  }

  Transformation power(Transformation const& s, std::size_t k) {
    if (k == 0) {
      throw InvalidArgument("power exponent must be positive");
    }
    Transformation result = s;
    for (std::size_t i = 1; i < k; ++i) {
      result = result * s;
    }
    return result;
  }

  Transformation parse_transformation(std::string_view text) {
    std::vector<State> images;
    std::size_t        i = 0;
    auto               skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    skip_ws();
    if (i == text.size() || text[i] != '[') {
      throw InvalidArgument("expected '[' in transformation \""
                            + std::string(text) + "\"");
    }
    ++i;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
      ++i;
    } else {
      while (true) {
        skip_ws();
        std::size_t start = i;
        unsigned long value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          value = value * 10 + static_cast<unsigned long>(text[i] - '0');
          if (value > 0xFFFFFFFFul) {
            throw InvalidArgument("image value too large in \""
                                  + std::string(text) + "\"");
          }
          ++i;
        }
        if (start == i) {
          throw InvalidArgument("expected a number in transformation \""
                                + std::string(text) + "\"");
        }
        images.push_back(static_cast<State>(value));
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ']') {
          ++i;
          break;
        }
        throw InvalidArgument("expected ',' or ']' in transformation \""
                              + std::string(text) + "\"");
      }
    }
    skip_ws();
    if (i != text.size()) {
      throw InvalidArgument("trailing characters after transformation \""
                            + std::string(text) + "\"");
    }
    return Transformation(std::move(images));
  }

  std::size_t TransformationHash::operator()(
      Transformation const& t) const noexcept {
    // FNV-1a over the image list
    std::size_t h = 1469598103934665603ull;
    for (State x : t.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // PartialTransformation
  ////////////////////////////////////////////////////////////////////////

  std::optional<State> PartialTransformation::operator()(State x) const {
    if (!is_defined(x)) {
      return std::nullopt;
    }
    return _images[x - 1];
  }

  void PartialTransformation::set(State x, State value) {
    if (x < 1 || x > _images.size()) {
      throw InvalidArgument("point " + std::to_string(x)
                            + " outside the domain of a partial map of degree "
                            + std::to_string(_images.size()));
    }
    if (value < 1 || value > _codomain) {
      throw InvalidArgument("value " + std::to_string(value)
                            + " outside the codomain of size "
                            + std::to_string(_codomain));
    }
    _images[x - 1] = value;
  }

  std::vector<State> PartialTransformation::domain() const {
    std::vector<State> result;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != 0) {
        result.push_back(static_cast<State>(i + 1));
      }
    }
    return result;
  }

  std::vector<State> PartialTransformation::image_set() const {
    std::vector<State> result;
    for (State y : _images) {
      if (y != 0) {
        result.push_back(y);
      }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  bool PartialTransformation::is_injective() const {
    return image_set().size() == domain().size();
  }

  PartialTransformation PartialTransformation::inverse() const {
    if (!is_injective()) {
      throw InvalidArgument("cannot invert a non-injective partial map "
                            + to_string());
    }
    PartialTransformation result(_codomain, _images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != 0) {
        result._images[_images[i] - 1] = static_cast<State>(i + 1);
      }
    }
    return result;
  }

  Transformation PartialTransformation::complete_with_identity() const {
    if (degree() != _codomain) {
      throw InvalidArgument("identity completion needs equal degree and "
                            "codomain");
    }
    std::vector<State> images(_images);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] == 0) {
        images[i] = static_cast<State>(i + 1);
      }
    }
    return Transformation(std::move(images));
  }

  Transformation PartialTransformation::to_total() const {
    if (degree() != _codomain
        || std::find(_images.begin(), _images.end(), 0) != _images.end()) {
      throw InvalidArgument("partial map " + to_string() + " is not total");
    }
    return Transformation(_images);
  }

  std::string PartialTransformation::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (i != 0) {
        out << ',';
      }
      if (_images[i] == 0) {
        out << '-';
      } else {
        out << _images[i];
      }
    }
    out << ']';
    return out.str();
  }

  PartialTransformation compose(PartialTransformation const& a,
                                PartialTransformation const& b) {
    if (a.codomain() > b.degree()) {
      throw InvalidArgument("cannot compose partial maps: codomain "
                            + std::to_string(a.codomain())
                            + " exceeds degree " + std::to_string(b.degree()));
    }
    PartialTransformation result(a.degree(), b.codomain());
    for (State x = 1; x <= a.degree(); ++x) {
      if (auto y = a(x)) {
        if (auto z = b(*y)) {
          result.set(x, *z);
        }
      }
    }
    return result;
  }

}  // namespace sgpcover
