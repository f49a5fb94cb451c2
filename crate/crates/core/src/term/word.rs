use std::fmt;
use std::sync::Arc;

/// A single wire type.
///
/// Plain PROP terms use the anonymous [`Object::Wire`], so a word of `n`
/// anonymous wires plays the role of the natural number `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Object {
    Wire,
    Named(Arc<str>),
}

impl Object {
    pub fn named(name: &str) -> Self {
        Object::Named(Arc::from(name))
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            Object::Wire => None,
            Object::Named(n) => Some(n),
        }
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Wire => f.write_str("_"),
            Object::Named(n) => f.write_str(n),
        }
    }
}

/// An object of the free monoid on the object labels; tensor is concatenation.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Object>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `n` anonymous wires.
    pub fn n(n: usize) -> Self {
        Word(vec![Object::Wire; n])
    }

    pub fn single(obj: Object) -> Self {
        Word(vec![obj])
    }

    pub fn named<S: AsRef<str>>(names: &[S]) -> Self {
        Word(names.iter().map(|s| Object::named(s.as_ref())).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_plain(&self) -> bool {
        self.0.iter().all(|o| *o == Object::Wire)
    }

    pub fn objects(&self) -> &[Object] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    pub fn split_at(&self, mid: usize) -> (Word, Word) {
        let (a, b) = self.0.split_at(mid);
        (Word(a.to_vec()), Word(b.to_vec()))
    }

    /// Strips `prefix` from the front, if it is one.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0
            .strip_prefix(prefix.0.as_slice())
            .map(|rest| Word(rest.to_vec()))
    }
}

impl FromIterator<Object> for Word {
    fn from_iter<I: IntoIterator<Item = Object>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl From<usize> for Word {
    fn from(n: usize) -> Self {
        Word::n(n)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_plain() {
            return write!(f, "{}", self.len());
        }
        f.write_str("[")?;
        for (i, o) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{o}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_words_print_as_numbers() {
        assert_eq!(Word::n(3).to_string(), "3");
        assert_eq!(Word::empty().to_string(), "0");
        assert_eq!(Word::named(&["A", "B"]).to_string(), "[A,B]");
    }

    #[test]
    fn mixed_words_mark_anonymous_wires() {
        let w = Word::n(1).concat(&Word::named(&["A"]));
        assert_eq!(w.to_string(), "[_,A]");
    }

    #[test]
    fn strip_prefix() {
        let w = Word::named(&["A", "B", "C"]);
        assert_eq!(w.strip_prefix(&Word::named(&["A"])), Some(Word::named(&["B", "C"])));
        assert_eq!(w.strip_prefix(&Word::named(&["B"])), None);
    }
}
