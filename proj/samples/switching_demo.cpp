// Switches coefficients from one frame to another without going through the
// signal, then checks the result against a direct analysis.

#include <finframe/finframe.hpp>

#include <cstdio>

int main() {
    using namespace finframe;
    const Frame g = random_frame(8, 19, 1);
    const Frame f = random_frame(8, 27, 2);
    const TransformMatrix t(g, f);

    Rng rng(3);
    const Vector x = rng.normal_vector(8);
    const auto switched = apply_transform(t, analysis(g, x));
    const auto direct = analysis(f, x);
    std::printf("T is %zux%zu\n", t.matrix().rows(), t.matrix().cols());
    std::printf("||T C_g x - C_f x|| = %g\n", norm2(subtract(switched.vector(), direct.vector())));
    std::printf("||x - reconstruct(f, T C_g x)|| = %g\n", norm2(subtract(reconstruct(f, switched), x)));
    std::printf("max error over 100 random pairs: %g\n", transform_stability_trial(8, 19, 27, 100, 4));
    return 0;
}
