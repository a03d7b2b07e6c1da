#pragma once

#include <string_view>

#include "detkit/matrix.hpp"

namespace helpers {

template <class F>
detkit::Matrix<typename F::Element> mat(const F& f, std::string_view text) {
    return detkit::parse_matrix(f, text);
}

template <class F>
detkit::Vector<typename F::Element> vec(const F& f, std::string_view text) {
    return detkit::parse_matrix(f, text).row(0);
}

template <class F>
detkit::VecTuple<typename F::Element> tup(const F& f, std::string_view text) {
    return detkit::parse_matrix(f, text).as_tuple();
}

} // namespace helpers
