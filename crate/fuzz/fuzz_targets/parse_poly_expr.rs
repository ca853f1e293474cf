#![no_main]

use libfuzzer_sys::fuzz_target;
use tgb::cli::{parse_poly_expr, render_poly};
use tgb::poly::{MonomialOrder, Ring};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let ring = Ring::new(["x", "y", "z", "x_1", "x_2"], MonomialOrder::GrevLex).unwrap();
    if let Ok(p) = parse_poly_expr(text, &ring) {
        assert!(p.is_canonical(&ring));
        let back = parse_poly_expr(&render_poly(&p, &ring), &ring).unwrap();
        assert_eq!(back, p);
    }
});
