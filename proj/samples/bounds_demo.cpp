// Prints bounds, dual bounds and the frame operator for each matrix file given.
//   bounds_demo samples/data/d1.json samples/data/d2.json

#include <finframe/finframe.hpp>

#include <cstdio>
#include <exception>

int main(int argc, char** argv) {
    using namespace finframe;
    for (int i = 1; i < argc; ++i) {
        try {
            const Frame f = new_frame(read_matrix(argv[i]));
            const auto b = f.bounds();
            const auto db = f.dual().bounds();
            std::printf("%s: %zu elements in dimension %zu\n", argv[i], f.count(), f.dim());
            std::printf("  A = %g, B = %g (tight: %s)\n", b.lower, b.upper, is_tight(f) ? "yes" : "no");
            std::printf("  dual: A = %g, B = %g (1/B = %g, 1/A = %g)\n", db.lower, db.upper, 1.0 / b.upper,
                        1.0 / b.lower);
            const Matrix s = frame_operator(f);
            std::printf("  S =\n");
            for (std::size_t r = 0; r < s.rows(); ++r) {
                std::printf("   ");
                for (std::size_t c = 0; c < s.cols(); ++c) {
                    std::printf(" %10.6f", s(r, c).real());
                }
                std::printf("\n");
            }
        } catch (const std::exception& e) {
            std::fprintf(stderr, "%s: %s\n", argv[i], e.what());
            return 1;
        }
    }
    return 0;
}
