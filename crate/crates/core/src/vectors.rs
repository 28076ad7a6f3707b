//! Vertex- and edge-indexed real vectors.

use std::ops::{Deref, DerefMut};

use serde::{Deserialize, Serialize};

macro_rules! real_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(Vec<f64>);

        impl $name {
            pub fn zeros(len: usize) -> Self {
                Self(vec![0.0; len])
            }

            pub fn values(&self) -> &[f64] {
                &self.0
            }

            pub fn into_vec(self) -> Vec<f64> {
                self.0
            }

            /// Entrywise `self + alpha * other`.
            pub fn axpy(&self, alpha: f64, other: &Self) -> Self {
                assert_eq!(self.len(), other.len(), "length mismatch");
                Self(self.0.iter().zip(&other.0).map(|(a, b)| a + alpha * b).collect())
            }

            pub fn scaled(&self, alpha: f64) -> Self {
                Self(self.0.iter().map(|a| alpha * a).collect())
            }

            pub fn max_abs(&self) -> f64 {
                crate::linalg::max_abs(&self.0)
            }
        }

        impl From<Vec<f64>> for $name {
            fn from(values: Vec<f64>) -> Self {
                Self(values)
            }
        }

        impl FromIterator<f64> for $name {
            fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
                Self(iter.into_iter().collect())
            }
        }

        impl Deref for $name {
            type Target = [f64];
            fn deref(&self) -> &[f64] {
                &self.0
            }
        }

        impl DerefMut for $name {
            fn deref_mut(&mut self) -> &mut [f64] {
                &mut self.0
            }
        }
    };
}

real_vector!(
    /// A real function on the vertices of a graph.
    GraphFunction
);

real_vector!(
    /// A 1-form: one real per edge, relative to the edge's orientation.
    OneForm
);

real_vector!(
    /// A signed measure on the vertex set, stored as point masses.
    VertexMeasure
);

impl GraphFunction {
    pub fn constant(len: usize, value: f64) -> Self {
        Self(vec![value; len])
    }

    pub fn indicator(len: usize, vertex: usize) -> Self {
        let mut v = vec![0.0; len];
        v[vertex] = 1.0;
        Self(v)
    }

    /// Pointwise product.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "length mismatch");
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect())
    }
}

impl VertexMeasure {
    pub fn total_mass(&self) -> f64 {
        self.0.iter().sum()
    }

    /// Mass of a vertex subset.
    pub fn mass_of(&self, set: &[usize]) -> f64 {
        set.iter().map(|&x| self.0[x]).sum()
    }

    /// Pairing `∫ φ dμ`.
    pub fn integrate(&self, phi: &[f64]) -> f64 {
        assert_eq!(self.len(), phi.len(), "length mismatch");
        self.0.iter().zip(phi).map(|(w, p)| w * p).sum()
    }
}
