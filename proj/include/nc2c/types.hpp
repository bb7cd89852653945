#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nc2c {

using Vec3 = std::array<double, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

enum class SeriesKind { non_contrast, contrast };

inline const char* to_string(SeriesKind k) {
  return k == SeriesKind::non_contrast ? "non_contrast" : "contrast";
}

// Error hierarchy. Each maps to one of the failure kinds named in module
// contracts; CLI translates validation errors to exit 1, runtime to exit 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundsError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct GridError : Error { using Error::Error; };
struct MetadataError : Error { using Error::Error; };
struct SeriesError : Error { using Error::Error; };          // inconsistent / missing-slice DICOM series
struct CorruptBundleError : Error { using Error::Error; };
struct OrientationError : Error { using Error::Error; };
struct RegistrationError : Error { using Error::Error; };
struct EmptyRegionError : Error { using Error::Error; };
struct MaskConsistencyError : Error { using Error::Error; };
struct InsufficientDataError : Error { using Error::Error; };
struct GeometryError : Error { using Error::Error; };
struct StateError : Error { using Error::Error; };
struct TrainingError : Error { using Error::Error; };

}  // namespace nc2c
