import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-device-view', template: `<p>{{ title }}</p>` })
export class DeviceViewComponent { title = 'Device view'; }
