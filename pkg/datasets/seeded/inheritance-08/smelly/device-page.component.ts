import { Component, Injectable } from '@angular/core';
import { BaseDevicePageComponent } from './base-device-page';

@Component({
  selector: 'app-device-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class DevicePageComponent extends BaseDevicePageComponent {
  pageTitle = 'Device Page';
}
