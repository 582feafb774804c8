/// Successor-based generation of prenecklaces in lexicographic order.
///
/// Each item is the word together with the length `p` of its longest Lyndon
/// prefix. The word is a necklace iff `p` divides `n`, and a Lyndon word
/// (primitive necklace) iff `p == n`.
#[derive(Clone, Debug)]
pub struct Prenecklaces {
    // a[0] is a sentinel; the word is a[1..=n]
    a: Vec<u8>,
    k: u8,
    n: usize,
    next_p: Option<usize>,
}

impl Prenecklaces {
    pub fn new(k: usize, n: usize) -> Self {
        assert!(
            k >= 2 && k <= u8::MAX as usize,
            "alphabet size out of range"
        );
        assert!(n >= 1, "length must be positive");
        Prenecklaces {
            a: vec![0; n + 1],
            k: k as u8,
            n,
            next_p: Some(1),
        }
    }
}

impl Iterator for Prenecklaces {
    type Item = (Vec<u8>, usize);

    fn next(&mut self) -> Option<Self::Item> {
        let p = self.next_p?;
        let item = (self.a[1..].to_vec(), p);

        let n = self.n;
        let mut i = n;
        while i > 0 && self.a[i] == self.k - 1 {
            i -= 1;
        }
        if i == 0 {
            self.next_p = None;
        } else {
            self.a[i] += 1;
            for j in i + 1..=n {
                self.a[j] = self.a[j - i];
            }
            self.next_p = Some(i);
        }
        Some(item)
    }
}
