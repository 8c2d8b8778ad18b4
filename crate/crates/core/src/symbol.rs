//! Interned polynomial indeterminates.
//!
//! A [`Symbol`] packs its kind and indices into a single `u32` whose natural
//! integer order is the global variable order used by every monomial
//! comparison:
//!
//! `a0 < a1 < ... < wp[..] (by index count, then lexicographic) < x < y < x1 < y1
//! < x2 < ... < l0 < l1 < ... < k0 < ... < h[i,j] < r`.
//!
//! `wp` indices are stored sorted, so `wp[2,1]` and `wp[1,2]` are the same
//! symbol.

use std::fmt;
use std::str::FromStr;

const KIND_SHIFT: u32 = 28;
const PAYLOAD_MASK: u32 = (1 << KIND_SHIFT) - 1;

const K_COEFF: u32 = 0;
const K_WP: u32 = 1;
const K_POINT: u32 = 2;
const K_L: u32 = 3;
const K_K: u32 = 4;
const K_H: u32 = 5;
const K_ROOT: u32 = 6;

/// Maximum number of derivative indices a `wp` symbol may carry.
pub const MAX_WP_INDICES: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(u32);

/// Decoded view of a [`Symbol`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymbolKind {
    /// Curve coefficient `a_i`.
    Coeff(u8),
    /// Kleinian `wp` with sorted indices (two or more).
    Wp(Vec<u8>),
    /// Generic curve point `x`.
    X,
    /// Generic curve point `y`.
    Y,
    /// The m-th point copy `x_m` (m >= 1).
    PointX(u8),
    /// The m-th point copy `y_m` (m >= 1).
    PointY(u8),
    /// Border vector entry `l_i`.
    BorderL(u8),
    /// Border vector entry `k_i`.
    BorderK(u8),
    /// Formal symmetric matrix entry `h[i,j]`, `i <= j`, 1-based.
    Matrix(u8, u8),
    /// Fixed square root of the top curve coefficient.
    Root,
}

impl Symbol {
    fn pack(kind: u32, payload: u32) -> Self {
        debug_assert!(payload <= PAYLOAD_MASK);
        Symbol((kind << KIND_SHIFT) | payload)
    }

    pub fn a(i: u8) -> Self {
        Self::pack(K_COEFF, i as u32)
    }

    /// `wp` symbol with the given indices (any order, 1..=7 each).
    pub fn wp(indices: &[u8]) -> Self {
        assert!(
            (1..=MAX_WP_INDICES).contains(&indices.len()),
            "wp needs 1..={MAX_WP_INDICES} indices"
        );
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        let mut payload = (idx.len() as u32) << 24;
        for (pos, &i) in idx.iter().enumerate() {
            assert!((1..=7).contains(&i), "wp index {i} out of 1..=7");
            payload |= (i as u32) << (21 - 3 * pos as u32);
        }
        Self::pack(K_WP, payload)
    }

    pub fn x() -> Self {
        Self::pack(K_POINT, 0)
    }

    pub fn y() -> Self {
        Self::pack(K_POINT, 1)
    }

    pub fn point_x(m: u8) -> Self {
        assert!(m >= 1);
        Self::pack(K_POINT, 2 * m as u32)
    }

    pub fn point_y(m: u8) -> Self {
        assert!(m >= 1);
        Self::pack(K_POINT, 2 * m as u32 + 1)
    }

    pub fn l(i: u8) -> Self {
        Self::pack(K_L, i as u32)
    }

    pub fn k(i: u8) -> Self {
        Self::pack(K_K, i as u32)
    }

    /// Formal entry of a symmetric matrix; `(i, j)` and `(j, i)` coincide.
    pub fn matrix(i: u8, j: u8) -> Self {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        Self::pack(K_H, ((i as u32) << 8) | j as u32)
    }

    pub fn root() -> Self {
        Self::pack(K_ROOT, 0)
    }

    pub fn kind(&self) -> SymbolKind {
        let payload = self.0 & PAYLOAD_MASK;
        match self.0 >> KIND_SHIFT {
            K_COEFF => SymbolKind::Coeff(payload as u8),
            K_WP => SymbolKind::Wp(self.wp_indices().unwrap()),
            K_POINT => match payload {
                0 => SymbolKind::X,
                1 => SymbolKind::Y,
                p if p % 2 == 0 => SymbolKind::PointX((p / 2) as u8),
                p => SymbolKind::PointY((p / 2) as u8),
            },
            K_L => SymbolKind::BorderL(payload as u8),
            K_K => SymbolKind::BorderK(payload as u8),
            K_H => SymbolKind::Matrix((payload >> 8) as u8, (payload & 0xff) as u8),
            _ => SymbolKind::Root,
        }
    }

    pub fn is_wp(&self) -> bool {
        self.0 >> KIND_SHIFT == K_WP
    }

    pub fn is_coeff(&self) -> bool {
        self.0 >> KIND_SHIFT == K_COEFF
    }

    pub fn is_border(&self) -> bool {
        matches!(self.0 >> KIND_SHIFT, K_L | K_K)
    }

    /// Sorted `wp` indices, or `None` for other kinds.
    pub fn wp_indices(&self) -> Option<Vec<u8>> {
        if !self.is_wp() {
            return None;
        }
        let payload = self.0 & PAYLOAD_MASK;
        let len = (payload >> 24) as usize;
        Some(
            (0..len)
                .map(|pos| ((payload >> (21 - 3 * pos as u32)) & 7) as u8)
                .collect(),
        )
    }

    /// Number of `wp` indices (0 for non-`wp` symbols).
    pub fn wp_order(&self) -> usize {
        if self.is_wp() {
            ((self.0 & PAYLOAD_MASK) >> 24) as usize
        } else {
            0
        }
    }

    pub fn coeff_index(&self) -> Option<u8> {
        match self.kind() {
            SymbolKind::Coeff(i) => Some(i),
            _ => None,
        }
    }

    /// Name used in the LaTeX rendering.
    pub fn latex(&self) -> String {
        match self.kind() {
            SymbolKind::Coeff(i) => format!("a_{{{i}}}"),
            SymbolKind::Wp(idx) => {
                let s: String = idx.iter().map(|i| i.to_string()).collect();
                format!("\\wp_{{{s}}}")
            }
            SymbolKind::X => "x".into(),
            SymbolKind::Y => "y".into(),
            SymbolKind::PointX(m) => format!("x_{{{m}}}"),
            SymbolKind::PointY(m) => format!("y_{{{m}}}"),
            SymbolKind::BorderL(i) => format!("l_{{{i}}}"),
            SymbolKind::BorderK(i) => format!("k_{{{i}}}"),
            SymbolKind::Matrix(i, j) => format!("h_{{{i}{j}}}"),
            SymbolKind::Root => "r".into(),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            SymbolKind::Coeff(i) => write!(f, "a{i}"),
            SymbolKind::Wp(idx) => {
                let s: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
                write!(f, "wp[{}]", s.join(","))
            }
            SymbolKind::X => write!(f, "x"),
            SymbolKind::Y => write!(f, "y"),
            SymbolKind::PointX(m) => write!(f, "x{m}"),
            SymbolKind::PointY(m) => write!(f, "y{m}"),
            SymbolKind::BorderL(i) => write!(f, "l{i}"),
            SymbolKind::BorderK(i) => write!(f, "k{i}"),
            SymbolKind::Matrix(i, j) => write!(f, "h[{i},{j}]"),
            SymbolKind::Root => write!(f, "r"),
        }
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_index_list(s: &str) -> Result<Vec<u8>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<u8>().map_err(|e| format!("bad index {t:?}: {e}")))
        .collect()
}

impl FromStr for Symbol {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bracketed = |prefix: &str| -> Option<Result<Vec<u8>, String>> {
            s.strip_prefix(prefix)
                .and_then(|rest| rest.strip_suffix(']'))
                .map(parse_index_list)
        };
        if let Some(idx) = bracketed("wp[") {
            let idx = idx?;
            if idx.is_empty() || idx.len() > MAX_WP_INDICES || idx.iter().any(|&i| !(1..=7).contains(&i)) {
                return Err(format!("bad wp symbol {s:?}"));
            }
            return Ok(Symbol::wp(&idx));
        }
        if let Some(idx) = bracketed("h[") {
            let idx = idx?;
            if idx.len() != 2 {
                return Err(format!("bad matrix symbol {s:?}"));
            }
            return Ok(Symbol::matrix(idx[0], idx[1]));
        }
        match s {
            "x" => return Ok(Symbol::x()),
            "y" => return Ok(Symbol::y()),
            "r" => return Ok(Symbol::root()),
            _ => {}
        }
        let (head, tail) = s.split_at(1.min(s.len()));
        let n: u8 = tail
            .parse()
            .map_err(|_| format!("unknown symbol {s:?}"))?;
        match head {
            "a" => Ok(Symbol::a(n)),
            "x" if n >= 1 => Ok(Symbol::point_x(n)),
            "y" if n >= 1 => Ok(Symbol::point_y(n)),
            "l" => Ok(Symbol::l(n)),
            "k" => Ok(Symbol::k(n)),
            _ => Err(format!("unknown symbol {s:?}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn global_order() {
        let chain = [
            Symbol::a(0),
            Symbol::a(1),
            Symbol::a(8),
            Symbol::wp(&[1, 1]),
            Symbol::wp(&[1, 2]),
            Symbol::wp(&[3, 3]),
            Symbol::wp(&[1, 1, 1]),
            Symbol::wp(&[1, 1, 1, 1]),
            Symbol::x(),
            Symbol::y(),
            Symbol::point_x(1),
            Symbol::point_y(1),
            Symbol::point_x(2),
            Symbol::l(0),
            Symbol::l(4),
            Symbol::k(0),
            Symbol::matrix(1, 1),
            Symbol::root(),
        ];
        for w in chain.windows(2) {
            assert!(w[0] < w[1], "{} < {}", w[0], w[1]);
        }
    }

    #[test]
    fn wp_indices_are_canonical() {
        assert_eq!(Symbol::wp(&[3, 1, 2]), Symbol::wp(&[1, 2, 3]));
        assert_eq!(Symbol::wp(&[2, 1]).wp_indices().unwrap(), vec![1, 2]);
        assert_eq!(Symbol::wp(&[2, 2, 2, 3]).wp_order(), 4);
        assert_eq!(Symbol::matrix(3, 1), Symbol::matrix(1, 3));
    }

    #[test]
    fn text_round_trip() {
        for s in ["a0", "a8", "wp[1,2,3]", "x", "y", "x2", "y3", "l4", "k0", "h[1,5]", "r"] {
            let sym: Symbol = s.parse().unwrap();
            assert_eq!(sym.to_string(), s);
        }
        assert!("q1".parse::<Symbol>().is_err());
        assert!("wp[0,1]".parse::<Symbol>().is_err());
    }
}
