"""Language-conditioned motion synthesis workbench.

Generates simulated tabletop binning demonstrations paired with natural
language commands, trains a multimodal policy network that maps
(sentence, image) to dynamic motor primitive parameters, rolls the
controller out in a kinematic simulator, and quantifies task success and
model uncertainty.
"""

__version__ = "0.1.0"
