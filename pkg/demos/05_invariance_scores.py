"""Score physical plausibility straight from silhouette masks.

Each motion family conserves something: uniform motion its speed, a thrown
ball its horizontal velocity and vertical acceleration, circular motion its
angular rate about the orbit center, sliding its acceleration along the
slope.  The Physical Invariance Score extracts that quantity frame by frame
from the masks alone and maps its relative spread through
1 / (1 + sigma/|mu|): exactly constant scores 1, a wobbly series scores
lower.  No model, no training -- just moments of the masks.

The demo scores clean rendered clips, then the same clips with every mask
shifted by a random pixel (sloppy segmentation), and shows what optional
pre-smoothing does to the comparison.
"""

from __future__ import annotations

import numpy as np

from newtondyn import MotionType, PisConfig, sample_dataset, score_videos, simulate
from newtondyn.pis import MOTION_INVARIANTS

SHOWN = (MotionType.UNIFORM_VELOCITY, MotionType.PARABOLIC, MotionType.CIRCULAR,
         MotionType.ROTATION, MotionType.SLOPE_SLIDING)

LEGEND = {
    "v": "speed", "vx": "horizontal velocity", "vy": "vertical velocity",
    "ax": "horizontal acceleration", "neg_ax": "deceleration magnitude",
    "ay": "vertical acceleration", "omega": "spin rate",
    "omega_about_pivot": "orbit angular rate",
    "delta_l": "long-axis change per frame", "delta_r": "axis-ratio change",
}


def clips(mt, n=4, seed=55):
    return [simulate(spec).masks for spec in sample_dataset(mt, n, seed=seed)]


def jitter(masks, rng):
    return [np.roll(m, (rng.integers(-1, 2), rng.integers(-1, 2)), axis=(0, 1))
            for m in masks]


def main():
    print(__doc__)
    videos = {mt: clips(mt) for mt in SHOWN}

    print(f"{'motion':22s}{'invariant':40s}{'median score':>12s}")
    for mt, vids in videos.items():
        report = score_videos(vids, mt)
        for kind in MOTION_INVARIANTS[mt]:
            name = f"{kind.value} ({LEGEND[kind.value]})"
            print(f"{mt.value:22s}{name:40s}{report.medians[kind.value]:12.4f}")
    print("(slope ay scores low even on clean clips: on a 0.16 rad slope it is")
    print(" only -g sin^2 a ~ -0.25 m/s^2, and a relative-spread score is harsh")
    print(" when the mean sits near zero.)")
    print()

    print("same clips, every mask shifted by a random whole pixel:")
    rng = np.random.default_rng(0)
    print(f"{'motion':22s}{'invariant':19s}{'clean':>8s}{'jittered':>10s}"
          f"{'jittered+smooth':>17s}")
    smooth = PisConfig(smoothing_window=5)
    for mt, vids in videos.items():
        noisy = [jitter(v, rng) for v in vids]
        clean = score_videos(vids, mt)
        rough = score_videos(noisy, mt)
        soft = score_videos(noisy, mt, cfg=smooth)
        k = MOTION_INVARIANTS[mt][0].value
        print(f"{mt.value:22s}{k:19s}{clean.medians[k]:8.4f}"
              f"{rough.medians[k]:10.4f}{soft.medians[k]:17.4f}")
    print()
    print("Pixel jitter reads as a physics violation and the score drops --")
    print("except for rotation, whose invariant is read off the orientation of")
    print("the mask, untouched by shifting it.  A 5-frame moving average hides")
    print("part of the wobble, which is exactly why scoring defaults to no")
    print("smoothing.")


if __name__ == "__main__":
    main()
