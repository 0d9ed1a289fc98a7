"""Recover physical states from silhouette masks.

The encoder never sees the simulator's ground truth.  Working from binary
masks alone it rebuilds the full 9-dimensional state per frame: centroid
position from first moments, orientation and equivalent-ellipse axes from
second moments, velocities from finite differences across frames (central
inside, second-order one-sided at the two ends).  This demo renders a few
clips, encodes the masks, and measures how far the recovered states land
from the analytic ones the simulator integrated.
"""

from __future__ import annotations

import numpy as np

from newtondyn import MotionType, default_world, encode_sequence, sample_dataset, simulate

SHOWN = (
    MotionType.PARABOLIC,        # gravity: quadratic y(t), end frames stress the differencing
    MotionType.ROTATION,         # orientation must unwrap cleanly past the pi ambiguity
    MotionType.SIZE_CHANGING,    # axes shrink frame to frame
    MotionType.CIRCULAR,         # round shape: no orientation signal at all
)


def compare(mt, seed):
    world = default_world(mt)
    spec = sample_dataset(mt, 1, seed=seed, world=world)[0]
    truth = simulate(spec)
    decoded = encode_sequence(truth.masks, truth.timestamps, world)

    est = np.array([st.as_array() for st in decoded])
    ref = np.array([st.as_array() for st in truth.states])
    mpp = world.meters_per_pixel

    centroid_px = np.hypot(est[:, 0] - ref[:, 0], est[:, 1] - ref[:, 1]).max() / mpp
    axes_pct = 100 * max(np.abs(est[:, 6] / ref[:, 6] - 1).max(),
                         np.abs(est[:, 7] / ref[:, 7] - 1).max())
    vel = np.hypot(est[:, 2] - ref[:, 2], est[:, 3] - ref[:, 3]).max()

    print(f"{mt.value}")
    print(f"  shape {spec.shape.kind.value}, {len(decoded)} frames at {world.fps:g} fps")
    print(f"  centroid error    {centroid_px:6.3f} px   (quantized to whole-pixel masks)")
    print(f"  axis error        {axes_pct:6.2f} %")
    print(f"  velocity error    {vel:6.3f} m/s")
    if mt is MotionType.ROTATION:
        print(f"  angle unwrapped   {est[0, 4]:+.2f} -> {est[-1, 4]:+.2f} rad "
              f"(truth {ref[-1, 4]:+.2f}; raw moments only give the angle mod pi)")
    if spec.shape.kind.value == "circle":
        print(f"  round silhouette: no orientation signal, angle carried forward "
              f"(spin reads {np.abs(est[:, 5]).max():.2f} rad/s)")
    print()


def main():
    print(__doc__)
    for i, mt in enumerate(SHOWN):
        compare(mt, seed=70 + i)
    print("Bounds to expect on clean rasterized masks: centroid within half a")
    print("pixel, axes within 2%, velocities within a pixel-per-frame of truth.")


if __name__ == "__main__":
    main()
