use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::number::{format_rational, int, ratio_i128, Rational};

/// Magnitude bound for the cached homogeneous form. Three-term products of
/// such values stay well inside `i128`.
const SMALL: i64 = 1 << 40;

/// Integer homogeneous coordinates `(x/w, y/w)` with `w > 0`.
#[derive(Clone, Copy, Debug)]
struct Homog {
    x: i64,
    y: i64,
    w: i64,
}

impl Homog {
    fn of(x: &Rational, y: &Rational) -> Option<Homog> {
        let xn = x.numer().to_i64()?;
        let xd = x.denom().to_i64()?;
        let yn = y.numer().to_i64()?;
        let yd = y.denom().to_i64()?;
        let w = i128::from(xd).lcm(&i128::from(yd));
        if w >= i128::from(SMALL) {
            return None;
        }
        let w = w as i64;
        let hx = xn.checked_mul(w / xd)?;
        let hy = yn.checked_mul(w / yd)?;
        if hx.abs() >= SMALL || hy.abs() >= SMALL {
            return None;
        }
        Some(Homog { x: hx, y: hy, w })
    }
}

/// A point with exact rational coordinates.
///
/// Points are totally ordered lexicographically by `(x, y)`.
#[derive(Clone)]
pub struct Point {
    x: Rational,
    y: Rational,
    fast: Option<Homog>,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Point {
        let fast = Homog::of(&x, &y);
        Point { x, y, fast }
    }

    pub fn from_ints(x: i64, y: i64) -> Point {
        Point::new(int(x), int(y))
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    /// `self + t * (other - self)`.
    pub fn lerp(&self, other: &Point, t: &Rational) -> Point {
        Point::new(&self.x + (&other.x - &self.x) * t, &self.y + (&other.y - &self.y) * t)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        if let (Some(a), Some(b)) = (self.fast, other.fast) {
            let (aw, bw) = (a.w as i128, b.w as i128);
            let w = 2 * aw * bw;
            let x = a.x as i128 * bw + b.x as i128 * aw;
            let y = a.y as i128 * bw + b.y as i128 * aw;
            return Point::new(
                Rational::new(BigInt::from(x), BigInt::from(w)),
                Rational::new(BigInt::from(y), BigInt::from(w)),
            );
        }
        let two = int(2);
        Point::new((&self.x + &other.x) / &two, (&self.y + &other.y) / &two)
    }

    pub fn cmp_x(&self, other: &Point) -> Ordering {
        match (self.fast, other.fast) {
            (Some(a), Some(b)) => (a.x as i128 * b.w as i128).cmp(&(b.x as i128 * a.w as i128)),
            _ => self.x.cmp(&other.x),
        }
    }

    pub fn cmp_y(&self, other: &Point) -> Ordering {
        match (self.fast, other.fast) {
            (Some(a), Some(b)) => (a.y as i128 * b.w as i128).cmp(&(b.y as i128 * a.w as i128)),
            _ => self.y.cmp(&other.y),
        }
    }

    /// Squared euclidean distance.
    pub fn dist2(&self, other: &Point) -> Rational {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }

    /// Small homogeneous integer form `(X, Y, W)` with `x = X/W`, `y = Y/W`,
    /// when all three fit comfortably in 64 bits.
    pub(crate) fn homogeneous(&self) -> Option<(i64, i64, i64)> {
        self.fast.map(|h| (h.x, h.y, h.w))
    }

    /// The point `(x/w, y/w)`; `w` must be nonzero.
    pub(crate) fn from_homogeneous(x: i128, y: i128, w: i128) -> Point {
        Point::new(ratio_i128(x, w), ratio_i128(y, w))
    }

    pub(crate) fn same_as(&self, other: &Point) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl PartialEq for Point {
    fn eq(&self, other: &Point) -> bool {
        self.same_as(other)
    }
}

impl Eq for Point {}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Point) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Point) -> Ordering {
        self.cmp_x(other).then_with(|| self.cmp_y(other))
    }
}

impl Hash for Point {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.x.hash(state);
        self.y.hash(state);
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Turn direction of an ordered point triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Left,
    Collinear,
    Right,
}

impl Orientation {
    fn from_sign(sign: Ordering) -> Orientation {
        match sign {
            Ordering::Greater => Orientation::Left,
            Ordering::Equal => Orientation::Collinear,
            Ordering::Less => Orientation::Right,
        }
    }

    pub fn reversed(self) -> Orientation {
        match self {
            Orientation::Left => Orientation::Right,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::Right => Orientation::Left,
        }
    }

    /// True when the two orientations are strictly opposite.
    pub fn opposes(self, other: Orientation) -> bool {
        matches!((self, other), (Orientation::Left, Orientation::Right) | (Orientation::Right, Orientation::Left))
    }
}

/// Sign of the cross product `(q - p) x (r - p)`; `Left` means positive.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    if let (Some(a), Some(b), Some(c)) = (p.fast, q.fast, r.fast) {
        let (ax, ay, aw) = (a.x as i128, a.y as i128, a.w as i128);
        let (bx, by, bw) = (b.x as i128, b.y as i128, b.w as i128);
        let (cx, cy, cw) = (c.x as i128, c.y as i128, c.w as i128);
        // Row scaling by the positive weights keeps the determinant's sign.
        let det = ax * (by * cw - bw * cy) - ay * (bx * cw - bw * cx) + aw * (bx * cy - by * cx);
        return Orientation::from_sign(det.cmp(&0));
    }
    let cross = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    Orientation::from_sign(if cross.is_zero() {
        Ordering::Equal
    } else if cross.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    })
}

/// Compares `p` and `q` along the direction of `a -> b` (which must be non-degenerate).
pub(crate) fn cmp_along(a: &Point, b: &Point, p: &Point, q: &Point) -> Ordering {
    match a.cmp_x(b) {
        Ordering::Less => p.cmp_x(q),
        Ordering::Greater => q.cmp_x(p),
        Ordering::Equal => match a.cmp_y(b) {
            Ordering::Less => p.cmp_y(q),
            _ => q.cmp_y(p),
        },
    }
}

/// `p` lies on the closed segment `[a, b]`.
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if orientation(a, b, p) != Orientation::Collinear {
        return false;
    }
    in_box(p, a, b)
}

/// `p` lies on the open segment `(a, b)`.
pub fn strictly_between(p: &Point, a: &Point, b: &Point) -> bool {
    on_segment(p, a, b) && p != a && p != b
}

/// Bounding-box test; combined with collinearity this is segment membership.
pub(crate) fn in_box(p: &Point, a: &Point, b: &Point) -> bool {
    let (xlo, xhi) = if a.cmp_x(b).is_le() { (a, b) } else { (b, a) };
    let (ylo, yhi) = if a.cmp_y(b).is_le() { (a, b) } else { (b, a) };
    p.cmp_x(xlo).is_ge() && p.cmp_x(xhi).is_le() && p.cmp_y(ylo).is_ge() && p.cmp_y(yhi).is_le()
}
