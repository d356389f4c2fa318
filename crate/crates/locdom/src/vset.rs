//! Operations on vertex sets kept as strictly increasing `Vec<usize>`.
//!
//! All public set outputs of the crate are sorted ascending; these helpers
//! keep that invariant without pulling in a set type for every call.

pub fn contains(set: &[usize], v: usize) -> bool {
    set.binary_search(&v).is_ok()
}

pub fn insert(set: &mut Vec<usize>, v: usize) {
    if let Err(pos) = set.binary_search(&v) {
        set.insert(pos, v);
    }
}

pub fn remove(set: &mut Vec<usize>, v: usize) {
    if let Ok(pos) = set.binary_search(&v) {
        set.remove(pos);
    }
}

pub fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

pub fn intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub fn difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() {
        if j < b.len() && b[j] < a[i] {
            j += 1;
        } else if j < b.len() && b[j] == a[i] {
            i += 1;
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
        }
    }
    out
}

pub fn is_disjoint(a: &[usize], b: &[usize]) -> bool {
    intersection(a, b).is_empty()
}

/// Sorts and deduplicates an arbitrary id list into set form.
pub fn normalize(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = vec![0, 2, 4];
        let b = vec![1, 2, 3];
        assert_eq!(union(&a, &b), vec![0, 1, 2, 3, 4]);
        assert_eq!(intersection(&a, &b), vec![2]);
        assert_eq!(difference(&a, &b), vec![0, 4]);
        assert!(!is_disjoint(&a, &b));
        assert!(is_disjoint(&[0, 4], &[1, 3]));
        assert_eq!(normalize(vec![3, 1, 3, 0]), vec![0, 1, 3]);
    }

    #[test]
    fn insert_remove_keep_order() {
        let mut s = vec![1, 3];
        insert(&mut s, 2);
        insert(&mut s, 2);
        assert_eq!(s, vec![1, 2, 3]);
        remove(&mut s, 1);
        remove(&mut s, 7);
        assert_eq!(s, vec![2, 3]);
    }
}
