use std::collections::HashMap;
use std::sync::Arc;

use super::{same_field, Elem, ExtField, FieldElement, FieldError};

/// Injective homomorphism GF(p^a) -> GF(p^b), a | b.
///
/// The primitive element of the smaller field is sent to the root of its
/// defining polynomial with the smallest coordinate index in the larger field.
#[derive(Debug, Clone)]
pub struct Embedding {
    sub: Arc<ExtField>,
    sup: Arc<ExtField>,
    forward: Vec<Elem>,
    backward: HashMap<Elem, Elem>,
}

impl Embedding {
    pub fn new(sub: &Arc<ExtField>, sup: &Arc<ExtField>) -> Result<Self, FieldError> {
        if sub.characteristic() != sup.characteristic() || !sup.degree().is_multiple_of(sub.degree()) {
            return Err(FieldError::NotASubfield {
                sub: sub.descriptor(),
                sup: sup.descriptor(),
            });
        }
        let cofactor = sup.group_order() / sub.group_order();
        let generator = sup.exp(cofactor);
        let modulus: Vec<Elem> = sub.modulus().iter().map(|&c| Elem(c)).collect();
        let mut root = None;
        let mut y = Elem::ONE;
        for _ in 0..sub.group_order() {
            // Horner evaluation with prime-field coefficients
            let val = modulus
                .iter()
                .rev()
                .fold(Elem::ZERO, |acc, &c| sup.add(sup.mul(acc, y), c));
            if val.is_zero() && root.is_none_or(|r: Elem| y < r) {
                root = Some(y);
            }
            y = sup.mul(y, generator);
        }
        let root = root.expect("a primitive polynomial splits in every extension of its degree");
        Ok(Self::from_image(sub, sup, root))
    }

    fn from_image(sub: &Arc<ExtField>, sup: &Arc<ExtField>, image: Elem) -> Self {
        let mut forward = vec![Elem::ZERO; sub.order() as usize];
        let mut backward = HashMap::with_capacity(sub.order() as usize);
        backward.insert(Elem::ZERO, Elem::ZERO);
        let mut x = Elem::ONE;
        let mut y = Elem::ONE;
        for _ in 0..sub.group_order() {
            forward[x.0 as usize] = y;
            backward.insert(y, x);
            x = sub.mul(x, sub.primitive());
            y = sup.mul(y, image);
        }
        Embedding {
            sub: Arc::clone(sub),
            sup: Arc::clone(sup),
            forward,
            backward,
        }
    }

    pub fn sub(&self) -> &Arc<ExtField> {
        &self.sub
    }

    pub fn sup(&self) -> &Arc<ExtField> {
        &self.sup
    }

    /// Image of the smaller field's primitive element.
    pub fn image_of_primitive(&self) -> Elem {
        self.forward[self.sub.primitive().0 as usize]
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.forward[x.0 as usize]
    }

    /// Preimage of `y`, if it lies in the embedded subfield.
    #[inline]
    pub fn pull(&self, y: Elem) -> Option<Elem> {
        self.backward.get(&y).copied()
    }

    /// Composite map `self` then `next`; the intermediate fields must agree.
    pub fn then(&self, next: &Embedding) -> Result<Embedding, FieldError> {
        if !same_field(&self.sup, &next.sub) {
            return Err(FieldError::NotASubfield {
                sub: self.sup.descriptor(),
                sup: next.sub.descriptor(),
            });
        }
        let image = next.apply(self.image_of_primitive());
        Ok(Self::from_image(&self.sub, &next.sup, image))
    }
}

/// Embeds `x` into `sup` using the least-root embedding.
pub fn tower_embed(
    x: &FieldElement,
    sub: &Arc<ExtField>,
    sup: &Arc<ExtField>,
) -> Result<FieldElement, FieldError> {
    if !same_field(x.field(), sub) {
        return Err(FieldError::Mismatch {
            left: x.field().descriptor(),
            right: sub.descriptor(),
        });
    }
    let e = Embedding::new(sub, sup)?;
    Ok(FieldElement::new(sup, e.apply(x.value())))
}

/// A chain of fields F_0 < F_1 < ... < F_top with mutually consistent embeddings.
///
/// Every level is embedded into the top field with the least-root rule; the
/// map between two intermediate levels is the one commuting with those, so
/// composition along the chain is exact.
#[derive(Debug, Clone)]
pub struct Tower {
    levels: Vec<Arc<ExtField>>,
    to_top: Vec<Embedding>,
}

impl Tower {
    pub fn new(levels: Vec<Arc<ExtField>>) -> Result<Self, FieldError> {
        let top = levels.last().ok_or(FieldError::ZeroArgument)?.clone();
        for pair in levels.windows(2) {
            if pair[1].degree() % pair[0].degree() != 0
                || pair[0].characteristic() != pair[1].characteristic()
            {
                return Err(FieldError::NotASubfield {
                    sub: pair[0].descriptor(),
                    sup: pair[1].descriptor(),
                });
            }
        }
        let to_top = levels
            .iter()
            .map(|f| Embedding::new(f, &top))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Tower { levels, to_top })
    }

    pub fn level(&self, i: usize) -> &Arc<ExtField> {
        &self.levels[i]
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// The embedding of level `from` into level `to` (from <= to).
    pub fn embedding(&self, from: usize, to: usize) -> Result<Embedding, FieldError> {
        if from > to {
            return Err(FieldError::DegreeNotDividing {
                a: self.levels[from].degree(),
                b: self.levels[to].degree(),
            });
        }
        let image_in_top = self.to_top[from].image_of_primitive();
        let image = self.to_top[to]
            .pull(image_in_top)
            .expect("subfield images are nested inside the top field");
        Ok(Embedding::from_image(
            &self.levels[from],
            &self.levels[to],
            image,
        ))
    }
}
