//! Percent-encoding helpers shared by the magnet query grammar and NDN
//! name handling. Escapes are always emitted with lowercase hex digits;
//! decoding accepts either case.

/// Unreserved characters that stay literal in query values.
pub(crate) fn is_unreserved(b: u8) -> bool {
    b.is_ascii_alphanumeric() || matches!(b, b'-' | b'.' | b'_' | b'~')
}

/// Literal set for NDN name components and for embedding escaped names
/// inside `xt` payloads. Dots are excluded so a literal `.` never collides
/// with the payload delimiter between a name and its trailing field.
pub(crate) fn is_ndn_literal(b: u8) -> bool {
    b.is_ascii_alphanumeric() || matches!(b, b'-' | b'_' | b'~')
}

pub(crate) fn encode_with(bytes: &[u8], is_literal: impl Fn(u8) -> bool) -> String {
    let mut out = String::with_capacity(bytes.len());
    for &b in bytes {
        if is_literal(b) {
            out.push(b as char);
        } else {
            out.push('%');
            out.push(HEX_LOWER[(b >> 4) as usize] as char);
            out.push(HEX_LOWER[(b & 0x0f) as usize] as char);
        }
    }
    out
}

const HEX_LOWER: &[u8; 16] = b"0123456789abcdef";

/// Byte offset of the offending escape sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct BadEscape(pub usize);

/// Strict percent-decoding. With `plus_as_space` a bare `+` decodes to a
/// space, matching the form-style encoders common in the wild; the
/// canonical serializers never emit `+`, so round trips are unaffected.
pub(crate) fn decode(text: &str, plus_as_space: bool) -> Result<Vec<u8>, BadEscape> {
    let bytes = text.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'%' => {
                if i + 2 >= bytes.len() + 1 {
                    return Err(BadEscape(i));
                }
                let hi = hex_val(*bytes.get(i + 1).ok_or(BadEscape(i))?).ok_or(BadEscape(i))?;
                let lo = hex_val(*bytes.get(i + 2).ok_or(BadEscape(i))?).ok_or(BadEscape(i))?;
                out.push((hi << 4) | lo);
                i += 3;
            }
            b'+' if plus_as_space => {
                out.push(b' ');
                i += 1;
            }
            b => {
                out.push(b);
                i += 1;
            }
        }
    }
    Ok(out)
}

fn hex_val(b: u8) -> Option<u8> {
    match b {
        b'0'..=b'9' => Some(b - b'0'),
        b'a'..=b'f' => Some(b - b'a' + 10),
        b'A'..=b'F' => Some(b - b'A' + 10),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_lowercase_hex() {
        assert_eq!(encode_with(b"a b/c", is_unreserved), "a%20b%2fc");
    }

    #[test]
    fn decode_accepts_both_cases() {
        assert_eq!(decode("a%2Fb", false).unwrap(), b"a/b");
        assert_eq!(decode("a%2fb", false).unwrap(), b"a/b");
    }

    #[test]
    fn decode_truncated_escape() {
        assert!(decode("a%2", false).is_err());
        assert!(decode("a%", false).is_err());
        assert!(decode("%zz", false).is_err());
    }

    #[test]
    fn plus_handling() {
        assert_eq!(decode("a+b", true).unwrap(), b"a b");
        assert_eq!(decode("a+b", false).unwrap(), b"a+b");
    }
}
