import { Component, Input, input } from '@angular/core';

export interface DeviceCardConfig {
  name: string;
  age: number;
  email: string;
  role: string;
  isActive: boolean;
  showAvatar: boolean;
  highlight: boolean;
  locale: string;
}

@Component({
  selector: 'app-device-card',
  template: `<div>{{ config.name }}</div>`
})
export class DeviceCardComponent {
  @Input() config!: DeviceCardConfig;
}
