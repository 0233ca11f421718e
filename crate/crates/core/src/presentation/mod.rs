//! Group presentations for Seifert fibered spaces and their base orbifolds.
//!
//! Generator order is fixed: handle generators `a1, b1, ...`, then `x` (and
//! `y` when the cover genus is odd), then one `c` per pair as written, then the
//! fiber `t`. Commutators are stored expanded as `g t g^-1 t^-1`.

mod homology;

use std::fmt;

use crate::symbol::{OrientabilityClass, SeifertSymbol, SymbolError};

pub use homology::{
    abelianize, h1, smith_normal_form, AbelianGroupStructure, IntegerMatrix,
};

/// One syllable `g^e` of a word, `e != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub exponent: i64,
}

/// A word over generator indices, kept syllable-reduced: adjacent letters
/// never share a generator and no exponent is zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new() -> Self {
        Word::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends `g^e`, merging with the last syllable and cancelling as needed.
    pub fn push(&mut self, generator: usize, exponent: i64) {
        if exponent == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(last) if last.generator == generator => {
                last.exponent += exponent;
                if last.exponent == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(Letter {
                generator,
                exponent,
            }),
        }
    }

    pub fn with(mut self, generator: usize, exponent: i64) -> Self {
        self.push(generator, exponent);
        self
    }

    pub fn append(&mut self, other: &Word) {
        for letter in &other.letters {
            self.push(letter.generator, letter.exponent);
        }
    }

    /// `g h g^-1 h^-1`
    pub fn commutator(g: usize, h: usize) -> Self {
        Word::new().with(g, 1).with(h, 1).with(g, -1).with(h, -1)
    }

    /// Deletes every occurrence of `generator` (the quotient map sending it
    /// to the identity), then re-reduces.
    pub fn kill(&self, generator: usize) -> Word {
        let mut out = Word::new();
        for letter in self.letters.iter().filter(|l| l.generator != generator) {
            out.push(letter.generator, letter.exponent);
        }
        out
    }

    /// Shifts generator indices above `removed` down by one.
    fn reindex_after_removal(&self, removed: usize) -> Word {
        let letters = self
            .letters
            .iter()
            .map(|l| Letter {
                generator: if l.generator > removed {
                    l.generator - 1
                } else {
                    l.generator
                },
                exponent: l.exponent,
            })
            .collect();
        Word { letters }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Assembles a presentation, checking that every letter refers to a
    /// generator. Generator names must be distinct.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        debug_assert!({
            let mut names = generators.clone();
            names.sort();
            names.windows(2).all(|w| w[0] != w[1])
        });
        assert!(
            relators
                .iter()
                .flat_map(|w| w.letters())
                .all(|l| l.generator < generators.len()),
            "relator refers to a missing generator"
        );
        Presentation {
            generators,
            relators,
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// The presentation of the quotient by the normal closure of `name`:
    /// the generator is removed and relators that become trivial are dropped.
    pub fn kill_generator(&self, name: &str) -> Option<Presentation> {
        let index = self.generator_index(name)?;
        let mut generators = self.generators.clone();
        generators.remove(index);
        let relators = self
            .relators
            .iter()
            .map(|w| w.kill(index))
            .filter(|w| !w.is_empty())
            .map(|w| w.reindex_after_removal(index))
            .collect();
        Some(Presentation {
            generators,
            relators,
        })
    }

    pub fn format_word(&self, word: &Word) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = word
            .letters()
            .iter()
            .map(|l| {
                let name = &self.generators[l.generator];
                if l.exponent == 1 {
                    name.clone()
                } else {
                    format!("{}^{}", name, l.exponent)
                }
            })
            .collect();
        parts.join("*")
    }
}

/// Text export: the generator list on the first line, then one relator per
/// line, e.g. `c1^2*t`.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.generators.join(", "))?;
        for relator in &self.relators {
            writeln!(f, "{}", self.format_word(relator))?;
        }
        Ok(())
    }
}

/// Generator bookkeeping shared by the templates.
struct Layout {
    names: Vec<String>,
}

impl Layout {
    fn add(&mut self, name: String) -> usize {
        self.names.push(name);
        self.names.len() - 1
    }
}

struct Handles {
    pairs: Vec<(usize, usize)>,
}

fn add_handles(layout: &mut Layout, count: u32) -> Handles {
    let pairs = (1..=count)
        .map(|i| {
            let a = layout.add(format!("a{i}"));
            let b = layout.add(format!("b{i}"));
            (a, b)
        })
        .collect();
    Handles { pairs }
}

fn add_fillings(layout: &mut Layout, count: usize) -> Vec<usize> {
    (1..=count).map(|i| layout.add(format!("c{i}"))).collect()
}

/// `c1 ... cn [a1,b1] ... [ak,bk]`
fn surface_prefix(cs: &[usize], handles: &Handles) -> Word {
    let mut word = Word::new();
    for &c in cs {
        word.push(c, 1);
    }
    for &(a, b) in &handles.pairs {
        word.append(&Word::commutator(a, b));
    }
    word
}

fn fiber_commutators(handles: &Handles, cs: &[usize], t: usize) -> Vec<Word> {
    let mut relators = Vec::new();
    for &(a, b) in &handles.pairs {
        relators.push(Word::commutator(a, t));
        relators.push(Word::commutator(b, t));
    }
    relators.extend(cs.iter().map(|&c| Word::commutator(c, t)));
    relators
}

fn filling_relators(symbol: &SeifertSymbol, cs: &[usize], t: usize) -> Vec<Word> {
    symbol
        .pairs()
        .iter()
        .zip(cs)
        .map(|(pair, &c)| Word::new().with(c, pair.q()).with(t, pair.p()))
        .collect()
}

/// Fundamental group of `(g+1, n2 | pairs)`, pairs taken as written.
///
/// With `g` even the base is `P^2 # (g/2 tori)`; with `g` odd it is
/// `Klein bottle # ((g-1)/2 tori)` and an extra generator `y` appears.
pub fn pi1_nonorientable(m: &SeifertSymbol) -> Result<Presentation, SymbolError> {
    if m.class() != OrientabilityClass::N2 {
        return Err(SymbolError::WrongClass {
            expected: OrientabilityClass::N2,
            found: m.class(),
        });
    }
    let g = m.genus() - 1;
    let even = g % 2 == 0;
    let mut layout = Layout { names: Vec::new() };
    let handles = add_handles(&mut layout, if even { g / 2 } else { (g - 1) / 2 });
    let x = layout.add("x".into());
    let y = (!even).then(|| layout.add("y".into()));
    let cs = add_fillings(&mut layout, m.pairs().len());
    let t = layout.add("t".into());

    let mut relators = fiber_commutators(&handles, &cs, t);
    relators.push(Word::new().with(x, 1).with(t, 1).with(x, -1).with(t, 1));
    if let Some(y) = y {
        relators.push(Word::commutator(y, t));
    }
    relators.extend(filling_relators(m, &cs, t));

    let mut surface = surface_prefix(&cs, &handles);
    match y {
        None => surface.push(x, -2),
        Some(y) => {
            surface.append(&Word::new().with(x, 1).with(y, 1).with(x, -1).with(y, 1));
        }
    }
    relators.push(surface);
    Ok(Presentation::new(layout.names, relators))
}

/// Fundamental group of `(g, o1 | pairs)`, pairs taken as written.
pub fn pi1_orientable(s: &SeifertSymbol) -> Result<Presentation, SymbolError> {
    if s.class() != OrientabilityClass::O1 {
        return Err(SymbolError::WrongClass {
            expected: OrientabilityClass::O1,
            found: s.class(),
        });
    }
    let mut layout = Layout { names: Vec::new() };
    let handles = add_handles(&mut layout, s.genus());
    let cs = add_fillings(&mut layout, s.pairs().len());
    let t = layout.add("t".into());

    let mut relators = fiber_commutators(&handles, &cs, t);
    relators.extend(filling_relators(s, &cs, t));
    let surface = surface_prefix(&cs, &handles);
    if !surface.is_empty() {
        relators.push(surface);
    }
    Ok(Presentation::new(layout.names, relators))
}

/// Dispatches on the base class.
pub fn pi1(s: &SeifertSymbol) -> Presentation {
    match s.class() {
        OrientabilityClass::O1 => pi1_orientable(s),
        OrientabilityClass::N2 => pi1_nonorientable(s),
    }
    .expect("class checked by dispatch")
}

/// Orbifold fundamental group of the base: `t` is deleted along with the
/// relators that only involve it, and `c^q t^p` becomes `c^q`.
pub fn orbifold_pi1(s: &SeifertSymbol) -> Presentation {
    pi1(s)
        .kill_generator("t")
        .expect("every pi1 presentation has a fiber generator")
}
