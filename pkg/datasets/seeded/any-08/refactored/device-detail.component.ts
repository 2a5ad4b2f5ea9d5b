import { Component } from '@angular/core';
import { Device, Api } from './device.model';

@Component({
  selector: 'app-device-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class DeviceDetailComponent {
  current: Device | null = null;
  constructor(private api: Api) {}

  load(id: number): void {
    this.api.get(id).subscribe((data: Device) => { this.current = data; });
  }

  parse(raw: string): Device {
    return JSON.parse(raw) as Device;
  }

}
