use std::io::{self, Write};

use crate::error::{Error, Result};

/// 8-bit RGB.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rgb(pub u8, pub u8, pub u8);

impl Rgb {
    pub const BLACK: Rgb = Rgb(0, 0, 0);
    pub const WHITE: Rgb = Rgb(255, 255, 255);
}

/// Row-major RGB8 raster.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    width: usize,
    height: usize,
    pixels: Vec<Rgb>,
}

impl Image {
    /// # Panics
    /// If either dimension is zero.
    pub fn new(width: usize, height: usize, fill: Rgb) -> Self {
        assert!(width >= 1 && height >= 1, "image dimensions must be at least 1x1");
        Self { width, height, pixels: vec![fill; width * height] }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[Rgb] {
        &self.pixels
    }

    pub fn get(&self, x: usize, y: usize) -> Option<Rgb> {
        (x < self.width && y < self.height).then(|| self.pixels[y * self.width + x])
    }

    pub fn set(&mut self, x: usize, y: usize, c: Rgb) {
        if x < self.width && y < self.height {
            self.pixels[y * self.width + x] = c;
        }
    }

    /// Copies `src` with its top-left corner at `(x0, y0)`, cropping at the
    /// edges.
    pub fn blit(&mut self, src: &Image, x0: usize, y0: usize) {
        for y in 0..src.height {
            for x in 0..src.width {
                self.set(x0 + x, y0 + y, src.pixels[y * src.width + x]);
            }
        }
    }

    /// Pixels that differ from `background`.
    pub fn count_not(&self, background: Rgb) -> usize {
        self.pixels.iter().filter(|&&p| p != background).count()
    }

    /// Inclusive bounding box `(x0, y0, x1, y1)` of pixels that differ from
    /// `background`.
    pub fn footprint_bounds(&self, background: Rgb) -> Option<(usize, usize, usize, usize)> {
        let mut b: Option<(usize, usize, usize, usize)> = None;
        for y in 0..self.height {
            for x in 0..self.width {
                if self.pixels[y * self.width + x] != background {
                    b = Some(match b {
                        None => (x, y, x, y),
                        Some((x0, y0, x1, y1)) => (x0.min(x), y0.min(y), x1.max(x), y1.max(y)),
                    });
                }
            }
        }
        b
    }

    /// Binary PPM (P6, maxval 255).
    pub fn write_ppm<W: Write>(&self, mut out: W) -> io::Result<()> {
        write!(out, "P6\n{} {}\n255\n", self.width, self.height)?;
        let bytes: Vec<u8> = self.pixels.iter().flat_map(|p| [p.0, p.1, p.2]).collect();
        out.write_all(&bytes)
    }

    pub fn to_ppm(&self) -> Vec<u8> {
        let mut buf = Vec::with_capacity(self.pixels.len() * 3 + 20);
        self.write_ppm(&mut buf).expect("writing to a Vec cannot fail");
        buf
    }

    /// Reads a binary PPM with maxval 255. Header comments are allowed.
    pub fn from_ppm(data: &[u8]) -> Result<Image> {
        let err = |m: &str| Error::Parse { line: 0, message: format!("ppm: {m}") };
        let mut pos = 0;
        let mut fields = [0usize; 3];
        if data.get(..2) != Some(b"P6") {
            return Err(err("missing P6 magic"));
        }
        pos += 2;
        for field in fields.iter_mut() {
            loop {
                match data.get(pos) {
                    Some(b'#') => {
                        while data.get(pos).is_some_and(|&c| c != b'\n') {
                            pos += 1;
                        }
                    }
                    Some(c) if c.is_ascii_whitespace() => pos += 1,
                    _ => break,
                }
            }
            let start = pos;
            while data.get(pos).is_some_and(u8::is_ascii_digit) {
                pos += 1;
            }
            let digits = std::str::from_utf8(&data[start..pos]).map_err(|_| err("bad header"))?;
            *field = digits.parse().map_err(|_| err("bad header number"))?;
        }
        // single whitespace byte before the raster
        if !data.get(pos).is_some_and(u8::is_ascii_whitespace) {
            return Err(err("missing separator after header"));
        }
        pos += 1;

        let [width, height, maxval] = fields;
        if maxval != 255 {
            return Err(err("only maxval 255 is supported"));
        }
        if width == 0 || height == 0 {
            return Err(err("zero dimension"));
        }
        let len = width
            .checked_mul(height)
            .and_then(|n| n.checked_mul(3))
            .ok_or_else(|| err("dimensions overflow"))?;
        let raster = data.get(pos..).filter(|r| r.len() == len).ok_or_else(|| err("raster size mismatch"))?;
        let pixels = raster.chunks_exact(3).map(|c| Rgb(c[0], c[1], c[2])).collect();
        Ok(Image { width, height, pixels })
    }
}
