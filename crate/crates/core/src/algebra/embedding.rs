//! Field embeddings GF(p^e) → GF(p^E) with e | E.

use std::collections::HashMap;
use std::sync::Arc;

use super::field::FieldRef;
use crate::error::{Error, Result};

/// The embedding sending the class of `x` in the small field to a fixed root
/// of its modulus in the big field: the root with least integer encoding,
/// or `x` itself when both fields coincide.
#[derive(Clone, Debug)]
pub struct Embedding {
    small: FieldRef,
    big: FieldRef,
    image: Vec<u32>,
    preimage: HashMap<u32, u32>,
}

impl Embedding {
    pub fn new(small: &FieldRef, big: &FieldRef) -> Result<Self> {
        let missing = Error::EmbeddingMissing {
            small: small.order() as u64,
            big: big.order() as u64,
        };
        if small.characteristic() != big.characteristic() || big.degree() % small.degree() != 0 {
            return Err(missing);
        }
        let generator = if small == big {
            if small.degree() == 1 {
                0
            } else {
                small.characteristic()
            }
        } else {
            let modulus = small.modulus();
            big.elements()
                .find(|&r| {
                    modulus
                        .iter()
                        .rev()
                        .fold(0, |acc, &c| big.add(big.mul(acc, r), c))
                        == 0
                })
                .ok_or(missing)?
        };
        let image: Vec<u32> = small
            .elements()
            .map(|a| {
                small
                    .digits(a)
                    .iter()
                    .rev()
                    .fold(0, |acc, &d| big.add(big.mul(acc, generator), d))
            })
            .collect();
        let preimage = image.iter().enumerate().map(|(a, &b)| (b, a as u32)).collect();
        Ok(Embedding {
            small: Arc::clone(small),
            big: Arc::clone(big),
            image,
            preimage,
        })
    }

    pub fn small(&self) -> &FieldRef {
        &self.small
    }

    pub fn big(&self) -> &FieldRef {
        &self.big
    }

    #[inline]
    pub fn map(&self, a: u32) -> u32 {
        self.image[a as usize]
    }

    /// The small-field element mapping to `b`, if `b` lies in the image.
    pub fn preimage(&self, b: u32) -> Option<u32> {
        self.preimage.get(&b).copied()
    }

    pub fn map_slice(&self, v: &[u32]) -> Vec<u32> {
        v.iter().map(|&a| self.map(a)).collect()
    }
}
