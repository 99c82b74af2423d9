use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::exactnum::Rational;

/// Coordinates of a Lie algebra element against the algebra's ordered basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<Rational>,
}

impl Element {
    pub fn new(coords: Vec<Rational>) -> Self {
        Element { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Element { coords: vec![Rational::zero(); dim] }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Element {
        Element { coords: self.coords.iter().map(|x| x * c).collect() }
    }

    /// Plain coordinate dot product, i.e. a covector applied to a vector.
    pub fn dot(&self, other: &Element) -> Rational {
        self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum()
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim());
        Element { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim());
        Element { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { coords: self.coords.iter().map(|a| -a).collect() }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element{self}")
    }
}
