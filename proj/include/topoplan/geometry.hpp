#pragma once

#include <cmath>

namespace topoplan {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(const Vec2& a, const Vec2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Axis-aligned rectangle. Containment tests use the open interior.
struct Rect {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 0.0;
    double ymax = 0.0;

    bool valid() const { return xmin < xmax && ymin < ymax; }

    bool contains_open(const Vec2& p) const {
        return p.x > xmin && p.x < xmax && p.y > ymin && p.y < ymax;
    }

    bool strictly_inside(const Rect& outer) const {
        return xmin > outer.xmin && ymin > outer.ymin &&
               xmax < outer.xmax && ymax < outer.ymax;
    }
};

}  // namespace topoplan
